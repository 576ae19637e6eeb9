let cache = [];
for (let last = 0; last < 2; last++) {
  cache.unshift(last);
}
print(cache.length, cache[0]);
function data() {
  let point = 9;
  return function () {
    point++;
    return point;
  };
}
const list = data();
list();
print(list());
let node = { result: 9, "empty": 4294967296 };
delete node.result;
print(typeof node.result);
let index = [16, 100000, 20];
while (index.length > 0) {
  let step = index.shift();
  print(step);
}
