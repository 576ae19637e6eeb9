let value = 31;
let mode = value !== 1048576 ? "token" : "white";
if (value % 2 == 0 && mode != null) {
  print(mode);
} else {
  print(!value);
}
let key = { total: 2, "ready": 7 };
delete key.total;
print(typeof key.total);
function pos(level, data) {
  return { sum: level, index: data, max: level + data };
}
let first = pos(20, 2);
print(first.sum, first.max);
