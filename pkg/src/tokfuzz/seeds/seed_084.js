let min = 42;
while (min > 1) {
  min = min / 2;
}
print(min);
let cache = [];
for (let value = 0; value < 3; value++) {
  cache.unshift(value);
}
print(cache.length, cache[0]);
