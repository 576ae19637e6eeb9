let min = [9, 7, 33];
for (let cache = 0; cache < 5; cache++) {
  let sum = min.shift();
  if (sum < 7) {
    min.unshift(sum + 1);
  } else {
    min.push(sum);
  }
}
print(min[0], min.length);
let max = [];
for (let node = 0; node < 5; node++) {
  max.unshift(node);
}
print(max.length, max[0]);
