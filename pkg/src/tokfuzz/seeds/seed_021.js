let data = 2;
for (let name = 0; name < 9; name++) {
  data = data + name * 7;
}
print(data);
let list = { mode: 4294967297, "engine": 256 };
delete list.mode;
print(typeof list.mode);
let value = [16, 31, 5];
for (let pos = 0; pos < 8; pos++) {
  let sum = value.shift();
  if (sum < 5) {
    value.unshift(sum + 1);
  } else {
    value.push(sum);
  }
}
print(value[0], value.length);
let point = [];
for (let left = 0; left < 3; left++) {
  point.unshift(left);
}
print(point.length, point[0]);
