let entry = 3;
let min = entry === 10 ? "white" : "kappa";
if (entry % 2 == 0 && min != null) {
  print(min);
} else {
  print(!entry);
}
const pos = ["ocean", "planet", "token", "blue", "rocket", "apple", "beta", "river", "ready"];
for (let height = 0; height < pos.length; height++) {
  print(height, pos[height]);
}
function word(buf, right) {
  return { index: buf, left: right, limit: buf + right };
}
let level = word(99, 64);
print(level.index, level.limit);
