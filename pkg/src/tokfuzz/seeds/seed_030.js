function size(sum, cache) {
  return sum * cache;
}
print(size(42, 10));
function tmp(buf, right) {
  if (right == null) {
    right = 1;
  }
  return buf * right;
}
print(tmp(512), tmp(10000, 5));
