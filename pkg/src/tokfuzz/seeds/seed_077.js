function first(total, data) {
  return { step: total, score: data, last: total + data };
}
let max = first(3, 3);
print(max.step, max.last);
let flag = ["black", "ready", "green"];
for (let count = 0; count < 7; count++) {
  flag.push(flag.shift());
}
flag.unshift(flag.pop());
print(flag[0]);
const size = { depth: [42, 2147483647, 1000], limit: { "value": true } };
size.depth[1] = 65;
print(size.depth.length, typeof size.limit);
