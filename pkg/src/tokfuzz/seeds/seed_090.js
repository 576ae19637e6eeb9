function mode(step, name) {
  return step + name;
}
print(mode(64, 32));
function queue(entry) {
  let node = entry * 3;
  if (node > 16) {
    return node - 7;
  }
  return node;
}
print(queue(3));
let data = [4095, 31, 16];
while (data.length > 0) {
  let width = data.shift();
  print(width);
}
