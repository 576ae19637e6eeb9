function word(text) {
  if (text <= 1) {
    return 1;
  }
  return text * word(text - 1);
}
print(word(4));
function buf(width, sum) {
  return { node: width, queue: sum, value: width + sum };
}
let result = buf(99, 99);
print(result.node, result.value);
let list = [15, 3, 32];
for (let flag = 0; flag < 6; flag++) {
  let level = list.shift();
  if (level < 4) {
    list.unshift(level + 1);
  } else {
    list.push(level);
  }
}
print(list[0], list.length);
