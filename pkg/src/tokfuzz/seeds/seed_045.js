let height = [99, 16, 10000];
while (height.length > 0) {
  let word = height.shift();
  print(word);
}
let point = { list: 8, text: function (list) { return list + 1; } };
print(point.text(point.list));
let index = [];
for (let items = 0; items < 4; items++) {
  index.unshift(items);
}
print(index.length, index[0]);
