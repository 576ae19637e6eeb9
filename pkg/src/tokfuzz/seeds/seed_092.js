function key(items) {
  if (items <= 1) {
    return 1;
  }
  return items * key(items - 1);
}
print(key(4));
let mode = new Array();
for (let score = 0; score < 6; score++) {
  mode.push(score % 4);
}
while (mode.length) {
  mode.pop();
}
let pos = [8, 8, 3];
for (let last = 0; last < 4; last++) {
  let limit = pos.shift();
  if (limit < 3) {
    pos.unshift(limit + 1);
  } else {
    pos.push(limit);
  }
}
print(pos[0], pos.length);
let total = { depth: 1023, width: "delta" };
total.depth = total.depth + 64;
total.width = "planet";
print(total.depth, total.width);
