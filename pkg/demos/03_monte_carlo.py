"""
Monte Carlo beyond polynomials
==============================

The exact oracle only reaches polynomials.  For sine and exponential test
functions the zero expectation is checked by simulation; the estimate is
a pure function of (seed, shards).
"""

import os

from steinchisq import TestFunction, WeightSpec, mc_expect_operator, sample

N = int(os.environ.get("STEINCHISQ_DEMO_N", 10**6))

spec = WeightSpec.create([1, 2, 3], [1, 1, 1])
x = sample(spec, 5, seed=1)
print("first draws of U:", x)

for f in [TestFunction.polynomial([0, 1]), TestFunction.sine(1.0),
          TestFunction.cosine(0.5), TestFunction.exponential(0.03)]:
    est = mc_expect_operator(spec, f, n=N, seed=2024)
    print(f"{f.family:12s} mean {est.mean:+.4f}  se {est.std_error:.4f}  "
          f"within 4 se: {est.within()}")

###############################################################################
# Same seed and shard count, any number of worker threads, same bits

a = mc_expect_operator(spec, TestFunction.sine(1.0), n=N // 10, seed=5, workers=1)
b = mc_expect_operator(spec, TestFunction.sine(1.0), n=N // 10, seed=5, workers=4)
print("identical across workers:", a == b)
