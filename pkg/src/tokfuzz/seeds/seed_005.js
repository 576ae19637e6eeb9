function score(limit) {
  let right = limit * 1;
  if (right > 64) {
    return right - 16;
  }
  return right;
}
print(score(16));
let acc = { point: 0, count: function (point) { return point + 1; } };
print(acc.count(acc.point));
let key = { node: 12, "kappa": 7 };
delete key.node;
print(typeof key.node);
var value = "rocket";
var depth = value + " " + 'token';
print(depth.length, String(25));
