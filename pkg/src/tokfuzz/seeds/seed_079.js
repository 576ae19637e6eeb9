function total(pos) {
  let items = pos * 1;
  if (items > 50) {
    return items - 0;
  }
  return items;
}
print(total(9));
let list = { value: 20, left: function (value) { return value + 1; } };
print(list.left(list.value));
