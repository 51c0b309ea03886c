"""
Zero expectation, checked exactly
=================================

For polynomial test functions the operator image is again a polynomial,
and its expectation under the weighted chi-square law is a finite
combination of moments.  The moment oracle computes those moments as
fractions, so the zero comes out exactly, not approximately.
"""

from fractions import Fraction

from steinchisq import (Polynomial, WeightSpec, build_table, central_moments,
                        central_moments_direct, cumulants, expect_operator,
                        expect_polynomial, operator_polynomial, verify_ibp)

spec = WeightSpec.create([1, 2, 3], [1, 1, 1])
table = build_table(spec)

f = Polynomial([0, 0, 0, 1])  # x^3
image = operator_polynomial(table, f)
print("T x^3 =", [str(c) for c in image.coeffs])
print("E[T x^3 (U - mu)] =", expect_operator(spec, f))
print("E[T x^3 (U)], non-centered =", expect_operator(spec, f, centered=False))

###############################################################################
# The moments behind it, from two independent routes

print("cumulants      :", [str(k) for k in cumulants(spec, 4)])
print("central (cum.) :", [str(m) for m in central_moments(spec, 6)])
print("central (dir.) :", [str(m) for m in central_moments_direct(spec, 6)])
print("E (U - mu)^2   :", expect_polynomial(spec, Polynomial([0, 0, 1])))

###############################################################################
# The one-chi-square integration by parts identity behind it all

for p in (1, Fraction(5, 2), 7):
    print(f"chi2({p}):", [str(verify_ibp(p, Polynomial.monomial(d))) for d in range(6)])
