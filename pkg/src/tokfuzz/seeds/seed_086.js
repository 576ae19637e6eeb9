let index = { tmp: 42, total: "forest" };
index.tmp = index.tmp + 4;
index.total = "cherry";
print(index.tmp, index.total);
function entry(pos) {
  const items = "ocean";
  return items + pos;
}
print(entry("ocean"));
let cache = 100000;
let text = cache <= 65 ? "green" : "done";
if (cache % 2 == 0 && text != null) {
  print(text);
} else {
  print(!cache);
}
