function point(cache, level) {
  return cache + level;
}
print(point(4, 64));
function value(key, last) {
  if (last == null) {
    last = 7;
  }
  return key * last;
}
print(value(65536), value(16777216, 4));
const data = ["black", "planet", "ready", "done", "engine", "open"];
for (let tmp = 0; tmp < data.length; tmp++) {
  print(tmp, data[tmp]);
}
