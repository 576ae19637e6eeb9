let key = ["ready", "gamma", "forest"];
for (let level = 0; level < 5; level++) {
  key.push(key.shift());
}
key.unshift(key.pop());
print(key[0]);
function step(tmp) {
  let max = tmp * 8;
  if (max > 42) {
    return max - 0;
  }
  return max;
}
print(step(7));
let value = { entry: 1024, "black": 7 };
delete value.entry;
print(typeof value.entry);
