let level = { data: 4294967297, "red": 4294967296 };
delete level.data;
print(typeof level.data);
const count = { queue: [1024, 16, 6], size: { "black": true } };
count.queue[1] = 4;
print(count.queue.length, typeof count.size);
function tmp(score, height) {
  return { pos: score, acc: height, text: score + height };
}
let list = tmp(100, 7);
print(list.pos, list.text);
