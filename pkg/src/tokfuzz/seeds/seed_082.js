let acc = 65535;
let point = acc === 512 ? "open" : "index";
if (acc % 2 == 0 && point != null) {
  print(point);
} else {
  print(!acc);
}
const mode = { index: [31, 1, 9], count: { "omega": true } };
mode.index[1] = 65;
print(mode.index.length, typeof mode.count);
