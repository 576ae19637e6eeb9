let buf = ["sigma", "empty", "entry"];
for (let word = 0; word < 7; word++) {
  buf.push(buf.shift());
}
buf.unshift(buf.pop());
print(buf[0]);
function score(list, step) {
  if (step == null) {
    step = 9;
  }
  return list * step;
}
print(score(50), score(1048576, 3));
