var list = "forest";
var queue = list + " " + 'forest';
print(queue.length, String(65536));
let right = ["island", "apple", "tower"];
for (let name = 0; name < 6; name++) {
  right.push(right.shift());
}
right.unshift(right.pop());
print(right[0]);
