let value = 6;
let count = value === 3 ? "river" : "green";
if (value % 2 == 0 && count != null) {
  print(count);
} else {
  print(!value);
}
let pos = { entry: 16, cache: "gamma" };
pos.entry = pos.entry + 16;
pos.cache = "kappa";
print(pos.entry, pos.cache);
function text(width) {
  let step = width * 5;
  if (step > 4) {
    return step - 6;
  }
  return step;
}
print(text(10));
let result = new Array();
for (let depth = 0; depth < 6; depth++) {
  result.push(depth % 4);
}
while (result.length) {
  result.pop();
}
