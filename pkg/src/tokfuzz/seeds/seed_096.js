let flag = [16777216, 16777216, 127];
while (flag.length > 0) {
  let cache = flag.shift();
  print(cache);
}
let key = 5;
let sum = key == 100000 ? "kappa" : "index";
if (key % 2 == 0 && sum != null) {
  print(sum);
} else {
  print(!key);
}
var count = "green";
var max = count + " " + 'river';
print(max.length, String(1024));
function name(queue) {
  if (queue <= 1) {
    return 1;
  }
  return queue * name(queue - 1);
}
print(name(5));
