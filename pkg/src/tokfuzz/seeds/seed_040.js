let size = { index: 42, first: "beta" };
size.index = size.index + 6;
size.first = "done";
print(size.index, size.first);
const name = { pos: [512, 64, 1000], point: { "signal": true } };
name.pos[1] = 64;
print(name.pos.length, typeof name.point);
let max = 128;
while (max > 1) {
  max = max / 2;
}
print(max);
