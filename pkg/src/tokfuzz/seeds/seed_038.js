let min = [];
for (let tmp = 0; tmp < 6; tmp++) {
  min.unshift(tmp);
}
print(min.length, min[0]);
function max(total) {
  if (total <= 1) {
    return 1;
  }
  return total * max(total - 1);
}
print(max(6));
