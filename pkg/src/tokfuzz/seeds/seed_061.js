function buf(right) {
  if (right <= 1) {
    return 1;
  }
  return right * buf(right - 1);
}
print(buf(7));
let node = { entry: 1023, left: "blue" };
node.entry = node.entry + 20;
node.left = "forest";
print(node.entry, node.left);
