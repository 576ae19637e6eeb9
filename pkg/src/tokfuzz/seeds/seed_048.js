const cache = ["open", "delta", "beta", "apple", "ocean", "alpha", "empty", "value"];
for (let max = 0; max < cache.length; max++) {
  print(max, cache[max]);
}
let node = [5, 2048, 65535];
while (node.length > 0) {
  let value = node.shift();
  print(value);
}
let key = { acc: 500, level: "signal" };
key.acc = key.acc + 3;
key.level = "forest";
print(key.acc, key.level);
