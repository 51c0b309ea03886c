"""
A Stein goodness-of-fit test
============================

Test whether data come from U = Q1 + 2*Q2.  Data drawn from the right law
give a large p-value; data from the law with every weight doubled are
rejected.
"""

import os

from steinchisq import WeightSpec, bootstrap_pvalue, default_battery, sample

B = int(os.environ.get("STEINCHISQ_DEMO_B", 999))

null = WeightSpec.create([1, 2], [1, 1])
print("battery:", [f.to_dict() for f in default_battery(null)])

good = sample(null, 5000, seed=11)
res = bootstrap_pvalue(good, null, B=B, seed=12)
print(f"correct law : statistic {res.statistic:.2f}  p = {res.pvalue:.3f}")

bad = sample(null.scaled(2), 5000, seed=13)
res = bootstrap_pvalue(bad, null, B=B, seed=14)
print(f"doubled law : statistic {res.statistic:.2f}  p = {res.pvalue:.3f}")
for row in res.to_dict()["per_function"]:
    print(f"   {row['function']}: {row['standardized_mean']:+.2f}")
