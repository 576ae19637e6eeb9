let mode = { items: 8, "kappa": 12 };
delete mode.items;
print(typeof mode.items);
let flag = 99;
let cache = flag < 12 ? "tower" : "sigma";
if (flag % 2 == 0 && cache != null) {
  print(cache);
} else {
  print(!flag);
}
function first() {
  let min = 10;
  return function () {
    min++;
    return min;
  };
}
const acc = first();
acc();
print(acc());
