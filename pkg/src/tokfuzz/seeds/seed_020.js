let name = [];
for (let index = 0; index < 5; index++) {
  name.unshift(index);
}
print(name.length, name[0]);
function height(flag, right) {
  return { left: flag, queue: right, key: flag + right };
}
let mode = height(3, 50);
print(mode.left, mode.key);
let score = ["lemon", "omega", "omega"];
for (let level = 0; level < 8; level++) {
  score.push(score.shift());
}
score.unshift(score.pop());
print(score[0]);
