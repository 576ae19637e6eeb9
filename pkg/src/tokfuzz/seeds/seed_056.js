let node = [5, 7, 7];
for (let depth = 0; depth < 4; depth++) {
  let flag = node.shift();
  if (flag < 6) {
    node.unshift(flag + 1);
  } else {
    node.push(flag);
  }
}
print(node[0], node.length);
const step = { data: [42, 512, 65536], min: { "index": true } };
step.data[1] = 10;
print(step.data.length, typeof step.min);
const limit = ["rocket", "beta", "apple", "omega"];
for (let level = 0; level < limit.length; level++) {
  print(level, limit[level]);
}
function items(word, pos) {
  if (pos == null) {
    pos = 2;
  }
  return word * pos;
}
print(items(4095), items(2147483647, 2));
