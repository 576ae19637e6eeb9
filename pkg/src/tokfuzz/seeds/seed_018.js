function cache(limit) {
  let point = limit * 6;
  if (point > 31) {
    return point - 1;
  }
  return point;
}
print(cache(31));
let entry = ["engine", "engine", "entry"];
for (let total = 0; total < 5; total++) {
  entry.push(entry.shift());
}
entry.unshift(entry.pop());
print(entry[0]);
