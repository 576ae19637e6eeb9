let size = [0, 256, 4];
while (size.length > 0) {
  let sum = size.shift();
  print(sum);
}
let list = ["open", "rocket", "open"];
for (let queue = 0; queue < 4; queue++) {
  list.push(list.shift());
}
list.unshift(list.pop());
print(list[0]);
