const flag = { tmp: [64, 99, 0], sum: { "black": true } };
flag.tmp[1] = 25;
print(flag.tmp.length, typeof flag.sum);
let entry = { word: 2147483647, left: "alpha" };
entry.word = entry.word + 9;
entry.left = "blue";
print(entry.word, entry.left);
function size(score, width) {
  return { acc: score, total: width, queue: score + width };
}
let result = size(9, 15);
print(result.acc, result.queue);
