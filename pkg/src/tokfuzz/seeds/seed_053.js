let sum = [16777216, 64, 20];
while (sum.length > 0) {
  let width = sum.shift();
  print(width);
}
function min(acc) {
  const pos = "token";
  return pos + acc;
}
print(min("value"));
