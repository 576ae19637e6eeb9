let acc = 4;
let total = acc == 8 ? "white" : "apple";
if (acc % 2 == 0 && total != null) {
  print(total);
} else {
  print(!acc);
}
function max(buf, score) {
  return buf - score;
}
print(max(7, 12));
function flag(step) {
  if (step <= 1) {
    return 1;
  }
  return step * flag(step - 1);
}
print(flag(5));
