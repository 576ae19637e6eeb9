let mode = [];
for (let first = 0; first < 6; first++) {
  mode.unshift(first);
}
print(mode.length, mode[0]);
let word = ["engine", "alpha", "red"];
for (let size = 0; size < 8; size++) {
  word.push(word.shift());
}
word.unshift(word.pop());
print(word[0]);
function text(min) {
  const entry = "engine";
  return entry + min;
}
print(text("ready"));
let level = { tmp: 10000, "forest": 0 };
delete level.tmp;
print(typeof level.tmp);
