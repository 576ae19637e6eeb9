function items(sum) {
  if (sum <= 1) {
    return 1;
  }
  return sum * items(sum - 1);
}
print(items(6));
function list() {
  let total = 0;
  return function () {
    total++;
    return total;
  };
}
const text = list();
text();
print(text());
