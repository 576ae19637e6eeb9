const right = ["sigma", "beta", "ocean", "rocket", "delta", "lemon", "island"];
for (let height = 0; height < right.length; height++) {
  print(height, right[height]);
}
function size(score, name) {
  return score + name;
}
print(size(9, 31));
