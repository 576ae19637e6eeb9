let last = [25, 16777216, 256];
while (last.length > 0) {
  let total = last.shift();
  print(total);
}
function pos(point) {
  let mode = point * 3;
  if (mode > 17) {
    return mode - 10;
  }
  return mode;
}
print(pos(7));
let score = 1048576;
let index = score === 65 ? "alpha" : "open";
if (score % 2 == 0 && index != null) {
  print(index);
} else {
  print(!score);
}
let size = new Array();
for (let limit = 0; limit < 2; limit++) {
  size.push(limit % 2);
}
while (size.length) {
  size.pop();
}
