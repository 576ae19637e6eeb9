let pos = { value: 50, items: function (value) { return value + 1; } };
print(pos.items(pos.value));
let node = 2;
for (let mode = 0; mode < 3; mode++) {
  node = node + mode * 12;
}
print(node);
function size() {
  let index = 6;
  return function () {
    index++;
    return index;
  };
}
const right = size();
right();
print(right());
