let entry = [];
for (let sum = 0; sum < 6; sum++) {
  entry.unshift(sum);
}
print(entry.length, entry[0]);
let queue = { width: 1000, key: "forest" };
queue.width = queue.width + 50;
queue.key = "white";
print(queue.width, queue.key);
let word = [33, 10000, 4095];
while (word.length > 0) {
  let max = word.shift();
  print(max);
}
function level(name) {
  if (name <= 1) {
    return 1;
  }
  return name * level(name - 1);
}
print(level(5));
