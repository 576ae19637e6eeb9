function items() {
  let count = 6;
  return function () {
    count++;
    return count;
  };
}
const limit = items();
limit();
print(limit());
var max = "island";
var size = max + " " + 'rocket';
print(size.length, String(4294967297));
