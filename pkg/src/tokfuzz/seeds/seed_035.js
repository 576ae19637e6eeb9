var entry = "open";
var depth = entry + " " + 'blue';
print(depth.length, String(100000));
function value(cache, pos) {
  if (pos == null) {
    pos = 16;
  }
  return cache * pos;
}
print(value(25), value(2048, 2));
let flag = ["entry", "done", "apple"];
for (let key = 0; key < 4; key++) {
  flag.push(flag.shift());
}
flag.unshift(flag.pop());
print(flag[0]);
let max = { buf: 25, queue: function (buf) { return buf + 1; } };
print(max.queue(max.buf));
