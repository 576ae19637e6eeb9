const first = ["sigma", "signal", "done", "omega", "island", "ocean", "token", "forest", "ready"];
for (let buf = 0; buf < first.length; buf++) {
  print(buf, first[buf]);
}
let items = 2;
for (let total = 0; total < 4; total++) {
  items = items + total * 16;
}
print(items);
let sum = { point: 31, "signal": 100 };
delete sum.point;
print(typeof sum.point);
let pos = new Array();
for (let acc = 0; acc < 8; acc++) {
  pos.push(acc % 4);
}
while (pos.length) {
  pos.pop();
}
