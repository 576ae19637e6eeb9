function sum(list, name) {
  return list * name;
}
print(sum(1, 7));
const level = ["gamma", "omega", "open", "value"];
for (let word = 0; word < level.length; word++) {
  print(word, level[word]);
}
