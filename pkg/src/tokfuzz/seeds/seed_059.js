let depth = 10;
let min = depth !== 500 ? "black" : "open";
if (depth % 2 == 0 && min != null) {
  print(min);
} else {
  print(!depth);
}
const cache = ["engine", "sigma", "done", "delta", "open", "blue"];
for (let mode = 0; mode < cache.length; mode++) {
  print(mode, cache[mode]);
}
