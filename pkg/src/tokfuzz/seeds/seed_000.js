let items = [50, 31, 16];
while (items.length > 0) {
  let label = items.shift();
  print(label);
}
let tmp = 7;
for (let cache = 0; cache < 9; cache++) {
  tmp = tmp + cache * 1;
}
print(tmp);
let width = [];
for (let limit = 0; limit < 2; limit++) {
  width.unshift(limit);
}
print(width.length, width[0]);
function data() {
  let name = 8;
  return function () {
    name++;
    return name;
  };
}
const key = data();
key();
print(key());
