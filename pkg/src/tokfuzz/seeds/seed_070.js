let last = 256;
let items = last == 16 ? "blue" : "token";
if (last % 2 == 0 && items != null) {
  print(items);
} else {
  print(!last);
}
function pos(result) {
  if (result <= 1) {
    return 1;
  }
  return result * pos(result - 1);
}
print(pos(3));
