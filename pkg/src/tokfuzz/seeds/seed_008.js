function count() {
  let word = 9;
  return function () {
    word++;
    return word;
  };
}
const left = count();
left();
print(left());
let key = [64, 33, 10000];
while (key.length > 0) {
  let step = key.shift();
  print(step);
}
let name = 6;
while (name > 1) {
  name = name / 2;
}
print(name);
let first = [32, 8, 9];
for (let sum = 0; sum < 7; sum++) {
  let entry = first.shift();
  if (entry < 9) {
    first.unshift(entry + 1);
  } else {
    first.push(entry);
  }
}
print(first[0], first.length);
