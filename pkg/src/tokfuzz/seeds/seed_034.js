let sum = [31, 2048, 15];
while (sum.length > 0) {
  let cache = sum.shift();
  print(cache);
}
function pos(limit, total) {
  if (total == null) {
    total = 8;
  }
  return limit * total;
}
print(pos(0), pos(2048, 5));
let depth = [15, 16, 5];
for (let last = 0; last < 8; last++) {
  let name = depth.shift();
  if (name < 6) {
    depth.unshift(name + 1);
  } else {
    depth.push(name);
  }
}
print(depth[0], depth.length);
