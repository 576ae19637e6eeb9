let text = { step: 16, last: "river" };
text.step = text.step + 25;
text.last = "planet";
print(text.step, text.last);
let score = [64, 17, 4];
while (score.length > 0) {
  let name = score.shift();
  print(name);
}
let depth = 16777216;
let count = depth <= 7 ? "index" : "ready";
if (depth % 2 == 0 && count != null) {
  print(count);
} else {
  print(!depth);
}
const left = { max: [12, 5, 1048576], list: { "ocean": true } };
left.max[1] = 99;
print(left.max.length, typeof left.list);
