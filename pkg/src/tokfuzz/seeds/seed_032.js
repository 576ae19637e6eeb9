const point = ["planet", "green", "value", "empty"];
for (let data = 0; data < point.length; data++) {
  print(data, point[data]);
}
let left = { entry: 2147483647, right: "cherry" };
left.entry = left.entry + 1;
left.right = "done";
print(left.entry, left.right);
function size(word, width) {
  return { name: word, queue: width, depth: word + width };
}
let last = size(9, 2);
print(last.name, last.depth);
