function depth(data) {
  if (data <= 1) {
    return 1;
  }
  return data * depth(data - 1);
}
print(depth(5));
let limit = new Array();
for (let cache = 0; cache < 1; cache++) {
  limit.push(cache % 2);
}
while (limit.length) {
  limit.pop();
}
function score(right, tmp) {
  return { text: right, index: tmp, height: right + tmp };
}
let pos = score(9, 3);
print(pos.text, pos.height);
