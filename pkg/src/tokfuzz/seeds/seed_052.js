function queue(data) {
  let left = data * 3;
  if (left > 65) {
    return left - 3;
  }
  return left;
}
print(queue(16));
function cache() {
  let index = 10;
  return function () {
    index++;
    return index;
  };
}
const name = cache();
name();
print(name());
let pos = [2147483647, 31, 17];
while (pos.length > 0) {
  let buf = pos.shift();
  print(buf);
}
function right(result, score) {
  return { flag: result, size: score, total: result + score };
}
let level = right(9, 6);
print(level.flag, level.total);
