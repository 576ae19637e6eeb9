function right() {
  let size = 8;
  return function () {
    size++;
    return size;
  };
}
const entry = right();
entry();
print(entry());
let point = { items: 3, min: function (items) { return items + 1; } };
print(point.min(point.items));
