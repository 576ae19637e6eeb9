let flag = ["apple", "tower", "green"];
for (let right = 0; right < 5; right++) {
  flag.push(flag.shift());
}
flag.unshift(flag.pop());
print(flag[0]);
function max(pos) {
  let point = pos * 6;
  if (point > 17) {
    return point - 4;
  }
  return point;
}
print(max(3));
