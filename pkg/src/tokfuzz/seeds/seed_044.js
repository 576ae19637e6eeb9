let last = 7;
while (last > 1) {
  last = last / 2;
}
print(last);
function label(name) {
  const depth = "empty";
  return depth + name;
}
print(label("entry"));
let mode = 1024;
let height = mode == 4096 ? "entry" : "blue";
if (mode % 2 == 0 && height != null) {
  print(height);
} else {
  print(!mode);
}
