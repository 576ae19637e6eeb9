let score = 9;
for (let left = 0; left < 4; left++) {
  score = score + left * 1;
}
print(score);
function depth(min, acc) {
  return min * acc;
}
print(depth(16, 16));
