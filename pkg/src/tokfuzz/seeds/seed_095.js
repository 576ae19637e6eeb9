function max(value, point) {
  if (point == null) {
    point = 10;
  }
  return value * point;
}
print(max(42), max(65536, 1));
function cache(text) {
  if (text <= 1) {
    return 1;
  }
  return text * cache(text - 1);
}
print(cache(7));
function score() {
  let buf = 4;
  return function () {
    buf++;
    return buf;
  };
}
const key = score();
key();
print(key());
const min = ["token", "index", "ready", "black", "alpha", "planet", "forest", "lemon", "apple"];
for (let entry = 0; entry < min.length; entry++) {
  print(entry, min[entry]);
}
