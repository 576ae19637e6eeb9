let word = 2;
for (let value = 0; value < 3; value++) {
  word = word + value * 15;
}
print(word);
function depth(max, mode) {
  if (mode == null) {
    mode = 5;
  }
  return max * mode;
}
print(depth(15), depth(2147483647, 6));
let flag = ["lemon", "forest", "island"];
for (let score = 0; score < 8; score++) {
  flag.push(flag.shift());
}
flag.unshift(flag.pop());
print(flag[0]);
