function name() {
  let node = 4;
  return function () {
    node++;
    return node;
  };
}
const tmp = name();
tmp();
print(tmp());
let data = { min: 6, label: function (min) { return min + 1; } };
print(data.label(data.min));
let buf = [100, 5, 1024];
while (buf.length > 0) {
  let size = buf.shift();
  print(size);
}
