var min = "white";
var score = min + " " + 'rocket';
print(score.length, String(127));
let width = 4;
let size = width >= 65536 ? "token" : "index";
if (width % 2 == 0 && size != null) {
  print(size);
} else {
  print(!width);
}
function depth(flag) {
  let items = flag * 5;
  if (items > 9) {
    return items - 0;
  }
  return items;
}
print(depth(12));
let limit = [1023, 31, 500];
while (limit.length > 0) {
  let right = limit.shift();
  print(right);
}
