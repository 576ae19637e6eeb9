let height = new Array();
for (let sum = 0; sum < 0; sum++) {
  height.push(sum % 3);
}
while (height.length) {
  height.pop();
}
function queue(width) {
  let key = width * 3;
  if (key > 6) {
    return key - 9;
  }
  return key;
}
print(queue(0));
