let mode = new Array();
for (let label = 0; label < 6; label++) {
  mode.push(label % 2);
}
while (mode.length) {
  mode.pop();
}
const total = { limit: [1, 1000, 17], sum: { "forest": true } };
total.limit[1] = 1;
print(total.limit.length, typeof total.sum);
function text(index, acc) {
  if (acc == null) {
    acc = 1;
  }
  return index * acc;
}
print(text(10), text(65536, 6));
let buf = 100000;
let word = buf <= 1000 ? "token" : "island";
if (buf % 2 == 0 && word != null) {
  print(word);
} else {
  print(!buf);
}
