const level = { value: [16777216, 512, 127], total: { "index": true } };
level.value[1] = 65;
print(level.value.length, typeof level.total);
let right = { key: 65535, tmp: "white" };
right.key = right.key + 63;
right.tmp = "done";
print(right.key, right.tmp);
