let right = { list: 0, width: function (list) { return list + 1; } };
print(right.width(right.list));
function key(word, size) {
  return word * size;
}
print(key(31, 33));
const value = ["green", "entry", "beta", "cherry", "gamma", "alpha", "ready", "omega", "white"];
for (let buf = 0; buf < value.length; buf++) {
  print(buf, value[buf]);
}
function node(entry, first) {
  if (first == null) {
    first = 1;
  }
  return entry * first;
}
print(node(10), node(50, 4));
