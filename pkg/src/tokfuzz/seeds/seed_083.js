let node = ["green", "ocean", "green"];
for (let queue = 0; queue < 6; queue++) {
  node.push(node.shift());
}
node.unshift(node.pop());
print(node[0]);
function items(level) {
  if (level <= 1) {
    return 1;
  }
  return level * items(level - 1);
}
print(items(8));
const total = ["entry", "beta", "open", "black", "delta", "omega", "planet"];
for (let buf = 0; buf < total.length; buf++) {
  print(buf, total[buf]);
}
