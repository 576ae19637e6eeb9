let index = [31, 33, 15];
for (let sum = 0; sum < 7; sum++) {
  let name = index.shift();
  if (name < 15) {
    index.unshift(name + 1);
  } else {
    index.push(name);
  }
}
print(index[0], index.length);
function cache(pos) {
  if (pos <= 1) {
    return 1;
  }
  return pos * cache(pos - 1);
}
print(cache(5));
let min = 15;
while (min > 1) {
  min = min / 2;
}
print(min);
