function left(name) {
  const label = "kappa";
  return label + name;
}
print(left("black"));
function level(size, step) {
  if (step == null) {
    step = 12;
  }
  return size * step;
}
print(level(2), level(63, 0));
let width = [];
for (let sum = 0; sum < 4; sum++) {
  width.unshift(sum);
}
print(width.length, width[0]);
let point = ["lemon", "apple", "river"];
for (let index = 0; index < 4; index++) {
  point.push(point.shift());
}
point.unshift(point.pop());
print(point[0]);
