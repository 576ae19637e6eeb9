let level = { width: 42, node: function (width) { return width + 1; } };
print(level.node(level.width));
let pos = [255, 16, 10];
while (pos.length > 0) {
  let left = pos.shift();
  print(left);
}
var index = "engine";
var first = index + " " + 'entry';
print(first.length, String(3));
const entry = { name: [42, 0, 1], data: { "omega": true } };
entry.name[1] = 25;
print(entry.name.length, typeof entry.data);
