function left(items, width) {
  return { limit: items, word: width, label: items + width };
}
let mode = left(6, 4);
print(mode.limit, mode.label);
let data = { right: 0, "red": 2147483647 };
delete data.right;
print(typeof data.right);
let result = ["green", "cherry", "river"];
for (let depth = 0; depth < 4; depth++) {
  result.push(result.shift());
}
result.unshift(result.pop());
print(result[0]);
