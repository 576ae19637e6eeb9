function key() {
  let tmp = 0;
  return function () {
    tmp++;
    return tmp;
  };
}
const cache = key();
cache();
print(cache());
const text = { data: [65, 2048, 1000], limit: { "done": true } };
text.data[1] = 65;
print(text.data.length, typeof text.limit);
function acc(items, sum) {
  return items + sum;
}
print(acc(7, 7));
function pos(min) {
  const step = "omega";
  return step + min;
}
print(pos("value"));
