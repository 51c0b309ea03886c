"""
Operator coefficients for a weighted chi-square sum
===================================================

Build the coefficient table for U = 1*Q1 + 2*Q2 (one degree of freedom
each) in exact arithmetic, and check the identities it satisfies.
"""

from steinchisq import WeightSpec, build_table, elementary_symmetric, leave_one_out

spec = WeightSpec.create(["1", "2"], ["1", "1"])
table = build_table(spec)

print("Lambda_k      :", [str(v) for v in table.lambda_full])
for i in range(1, spec.r + 1):
    print(f"Lambda_(k,{i})  :", [str(v) for v in table.lambda_loo[i - 1]])
print("mu_k          :", [str(v) for v in table.mu_seq])
print("mu = E U      :", table.mu)

###############################################################################
# Every structural identity, evaluated exactly

for name, ok in table.check():
    print(f"{'ok ' if ok else 'BAD'} {name}")

###############################################################################
# Rational weights stay exact, and repeated weights are merged

print([str(v) for v in elementary_symmetric(WeightSpec.create(["1/2", "-3", "5/7"], [1, 1, 1]).weights)])
print(leave_one_out([1, 2, 3], 1))
merged = WeightSpec.create([2, 1, 2], [1, 1, 3])
print("weights", [str(w) for w in merged.weights], "dofs", [str(m) for m in merged.dofs],
      "from input positions", merged.merged_from)
