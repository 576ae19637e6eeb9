let width = [32, 32, 32];
for (let value = 0; value < 8; value++) {
  let last = width.shift();
  if (last < 33) {
    width.unshift(last + 1);
  } else {
    width.push(last);
  }
}
print(width[0], width.length);
var total = "island";
var step = total + " " + 'planet';
print(step.length, String(4294967297));
function buf(tmp) {
  let count = tmp * 6;
  if (count > 6) {
    return count - 7;
  }
  return count;
}
print(buf(8));
function index(acc) {
  const key = "white";
  return key + acc;
}
print(index("omega"));
