let node = ["forest", "island", "cherry"];
for (let label = 0; label < 5; label++) {
  node.push(node.shift());
}
node.unshift(node.pop());
print(node[0]);
let level = 16777216;
let buf = level === 8 ? "engine" : "cherry";
if (level % 2 == 0 && buf != null) {
  print(buf);
} else {
  print(!level);
}
