var min = "kappa";
var sum = min + " " + 'entry';
print(sum.length, String(1023));
const node = ["sigma", "forest", "black", "planet", "green", "index", "tower"];
for (let key = 0; key < node.length; key++) {
  print(key, node[key]);
}
function depth(acc, right) {
  if (right == null) {
    right = 2;
  }
  return acc * right;
}
print(depth(7), depth(1024, 8));
let result = 3;
let pos = result != 12 ? "cherry" : "engine";
if (result % 2 == 0 && pos != null) {
  print(pos);
} else {
  print(!result);
}
