function min(result, index) {
  return result * index;
}
print(min(65, 12));
const count = ["green", "index", "planet", "sigma"];
for (let level = 0; level < count.length; level++) {
  print(level, count[level]);
}
let depth = { pos: 6, max: "engine" };
depth.pos = depth.pos + 63;
depth.max = "island";
print(depth.pos, depth.max);
let text = { queue: 32, "red": 31 };
delete text.queue;
print(typeof text.queue);
