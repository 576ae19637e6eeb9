let step = { items: 6, point: function (items) { return items + 1; } };
print(step.point(step.items));
let total = [15, 5, 15];
for (let acc = 0; acc < 5; acc++) {
  let tmp = total.shift();
  if (tmp < 6) {
    total.unshift(tmp + 1);
  } else {
    total.push(tmp);
  }
}
print(total[0], total.length);
