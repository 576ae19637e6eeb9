let depth = { list: 10000, "index": 12 };
delete depth.list;
print(typeof depth.list);
let mode = [31, 8, 33];
for (let buf = 0; buf < 6; buf++) {
  let entry = mode.shift();
  if (entry < 8) {
    mode.unshift(entry + 1);
  } else {
    mode.push(entry);
  }
}
print(mode[0], mode.length);
function count(first) {
  if (first <= 1) {
    return 1;
  }
  return first * count(first - 1);
}
print(count(9));
