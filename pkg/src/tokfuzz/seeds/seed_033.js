let key = 4;
for (let size = 0; size < 8; size++) {
  key = key + size * 0;
}
print(key);
function name(point) {
  if (point <= 1) {
    return 1;
  }
  return point * name(point - 1);
}
print(name(6));
let label = 32;
while (label > 1) {
  label = label / 2;
}
print(label);
