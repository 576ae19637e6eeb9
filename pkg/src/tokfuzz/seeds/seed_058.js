let mode = 6;
for (let max = 0; max < 8; max++) {
  mode = mode + max * 10;
}
print(mode);
let point = 63;
let name = point == 33 ? "open" : "empty";
if (point % 2 == 0 && name != null) {
  print(name);
} else {
  print(!point);
}
const buf = ["ready", "forest", "entry", "gamma"];
for (let sum = 0; sum < buf.length; sum++) {
  print(sum, buf[sum]);
}
let node = { first: 25, step: "empty" };
node.first = node.first + 12;
node.step = "blue";
print(node.first, node.step);
