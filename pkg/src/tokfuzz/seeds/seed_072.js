function word(depth, height) {
  return { buf: depth, tmp: height, count: depth + height };
}
let name = word(50, 12);
print(name.buf, name.count);
function size(limit, data) {
  return limit + data;
}
print(size(16, 10));
