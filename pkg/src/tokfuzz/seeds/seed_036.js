let level = new Array();
for (let score = 0; score < 3; score++) {
  level.push(score % 3);
}
while (level.length) {
  level.pop();
}
function first() {
  let list = 1;
  return function () {
    list++;
    return list;
  };
}
const total = first();
total();
print(total());
