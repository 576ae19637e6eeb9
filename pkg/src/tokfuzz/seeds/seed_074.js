function score(data, flag) {
  return { size: data, key: flag, sum: data + flag };
}
let mode = score(12, 1);
print(mode.size, mode.sum);
function index(entry, count) {
  if (count == null) {
    count = 9;
  }
  return entry * count;
}
print(index(0), index(4294967297, 0));
