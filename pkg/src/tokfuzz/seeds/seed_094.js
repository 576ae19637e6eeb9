function count(point) {
  const last = "forest";
  return last + point;
}
print(count("planet"));
let first = [33, 5, 9];
for (let label = 0; label < 8; label++) {
  let total = first.shift();
  if (total < 6) {
    first.unshift(total + 1);
  } else {
    first.push(total);
  }
}
print(first[0], first.length);
let left = 5;
for (let acc = 0; acc < 9; acc++) {
  left = left + acc * 1;
}
print(left);
