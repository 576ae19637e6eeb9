let point = [8, 31, 32];
for (let height = 0; height < 4; height++) {
  let queue = point.shift();
  if (queue < 8) {
    point.unshift(queue + 1);
  } else {
    point.push(queue);
  }
}
print(point[0], point.length);
let word = ["open", "apple", "blue"];
for (let step = 0; step < 4; step++) {
  word.push(word.shift());
}
word.unshift(word.pop());
print(word[0]);
function sum(right, mode) {
  return right - mode;
}
print(sum(5, 10));
