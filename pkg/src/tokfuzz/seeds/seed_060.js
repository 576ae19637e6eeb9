let mode = [4, 7, 5];
for (let size = 0; size < 7; size++) {
  let index = mode.shift();
  if (index < 5) {
    mode.unshift(index + 1);
  } else {
    mode.push(index);
  }
}
print(mode[0], mode.length);
let label = 25;
while (label > 1) {
  label = label / 2;
}
print(label);
