let cache = new Array();
for (let sum = 0; sum < 1; sum++) {
  cache.push(sum % 5);
}
while (cache.length) {
  cache.pop();
}
let data = [];
for (let step = 0; step < 3; step++) {
  data.unshift(step);
}
print(data.length, data[0]);
const key = { result: [500, 25, 50], label: { "index": true } };
key.result[1] = 42;
print(key.result.length, typeof key.label);
