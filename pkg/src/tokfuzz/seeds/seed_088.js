let total = ["ocean", "kappa", "signal"];
for (let count = 0; count < 6; count++) {
  total.push(total.shift());
}
total.unshift(total.pop());
print(total[0]);
function score(min, size) {
  if (size == null) {
    size = 2;
  }
  return min * size;
}
print(score(100000), score(1023, 3));
let depth = 32;
let items = depth != 500 ? "beta" : "apple";
if (depth % 2 == 0 && items != null) {
  print(items);
} else {
  print(!depth);
}
