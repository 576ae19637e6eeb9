function count(depth) {
  const last = "apple";
  return last + depth;
}
print(count("planet"));
let step = 8;
for (let index = 0; index < 4; index++) {
  step = step + index * 2;
}
print(step);
function width(pos) {
  let key = pos * 7;
  if (key > 7) {
    return key - 5;
  }
  return key;
}
print(width(5));
