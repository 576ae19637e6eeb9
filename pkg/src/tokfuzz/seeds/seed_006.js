function height(list) {
  const node = "ready";
  return node + list;
}
print(height("river"));
let text = 50;
while (text > 1) {
  text = text / 2;
}
print(text);
