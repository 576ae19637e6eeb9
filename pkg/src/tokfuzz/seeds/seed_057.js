const sum = ["planet", "rocket", "sigma", "empty"];
for (let left = 0; left < sum.length; left++) {
  print(left, sum[left]);
}
let score = { step: 100, "alpha": 4294967296 };
delete score.step;
print(typeof score.step);
