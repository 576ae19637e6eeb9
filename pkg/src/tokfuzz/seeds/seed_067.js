let width = { left: 12, sum: "entry" };
width.left = width.left + 15;
width.sum = "omega";
print(width.left, width.sum);
let items = 9;
for (let first = 0; first < 3; first++) {
  items = items + first * 3;
}
print(items);
