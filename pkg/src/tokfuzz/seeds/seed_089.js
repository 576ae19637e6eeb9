function word(acc) {
  const items = "forest";
  return items + acc;
}
print(word("white"));
function list(limit, buf) {
  return { queue: limit, min: buf, label: limit + buf };
}
let result = list(25, 10);
print(result.queue, result.label);
