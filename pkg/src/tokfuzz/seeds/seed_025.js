let min = { name: 50, list: function (name) { return name + 1; } };
print(min.list(min.name));
let index = new Array();
for (let last = 0; last < 4; last++) {
  index.push(last % 4);
}
while (index.length) {
  index.pop();
}
const sum = { flag: [8, 16777216, 64], mode: { "green": true } };
sum.flag[1] = 5;
print(sum.flag.length, typeof sum.mode);
let entry = { word: 99, "engine": 63 };
delete entry.word;
print(typeof entry.word);
