let acc = 1000;
let buf = acc > 127 ? "open" : "kappa";
if (acc % 2 == 0 && buf != null) {
  print(buf);
} else {
  print(!acc);
}
let width = { height: 10000, index: "island" };
width.height = width.height + 2;
width.index = "cherry";
print(width.height, width.index);
let tmp = new Array();
for (let count = 0; count < 1; count++) {
  tmp.push(count % 4);
}
while (tmp.length) {
  tmp.pop();
}
