let first = { count: 500, index: "sigma" };
first.count = first.count + 33;
first.index = "forest";
print(first.count, first.index);
function acc(right, level) {
  if (level == null) {
    level = 12;
  }
  return right * level;
}
print(acc(1048576), acc(20, 7));
let width = [];
for (let result = 0; result < 4; result++) {
  width.unshift(result);
}
print(width.length, width[0]);
