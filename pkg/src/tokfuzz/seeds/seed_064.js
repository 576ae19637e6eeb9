function node(items) {
  let list = items * 7;
  if (list > 65) {
    return list - 1;
  }
  return list;
}
print(node(15));
function text(right, step) {
  return { size: right, queue: step, max: right + step };
}
let first = text(65, 31);
print(first.size, first.max);
