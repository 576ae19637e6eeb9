var left = "value";
var total = left + " " + 'red';
print(total.length, String(1023));
let first = [4096, 25, 15];
while (first.length > 0) {
  let count = first.shift();
  print(count);
}
let queue = ["white", "ready", "rocket"];
for (let data = 0; data < 8; data++) {
  queue.push(queue.shift());
}
queue.unshift(queue.pop());
print(queue[0]);
let entry = { last: 128, label: "island" };
entry.last = entry.last + 20;
entry.label = "tower";
print(entry.last, entry.label);
