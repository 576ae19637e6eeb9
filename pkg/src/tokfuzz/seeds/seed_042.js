let key = [];
for (let limit = 0; limit < 3; limit++) {
  key.unshift(limit);
}
print(key.length, key[0]);
let value = ["white", "ocean", "omega"];
for (let tmp = 0; tmp < 8; tmp++) {
  value.push(value.shift());
}
value.unshift(value.pop());
print(value[0]);
function pos(list, text) {
  return list - text;
}
print(pos(32, 7));
