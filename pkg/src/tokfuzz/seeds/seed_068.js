let index = [];
for (let key = 0; key < 2; key++) {
  index.unshift(key);
}
print(index.length, index[0]);
let node = { tmp: 20, "planet": 512 };
delete node.tmp;
print(typeof node.tmp);
let limit = 6;
let first = limit < 3 ? "index" : "done";
if (limit % 2 == 0 && first != null) {
  print(first);
} else {
  print(!limit);
}
