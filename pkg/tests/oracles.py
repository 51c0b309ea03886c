"""Brute-force reference computations, independent of the package code."""
import itertools
from fractions import Fraction
from math import prod


def esp_bruteforce(weights):
    """Elementary symmetric sums by enumerating every subset."""
    r = len(weights)
    return [sum((prod(S, start=Fraction(1)) for S in itertools.combinations(weights, k)),
                Fraction(0)) for k in range(r + 1)]


def loo_bruteforce(weights, i):
    rest = list(weights[:i - 1]) + list(weights[i:])
    return esp_bruteforce(rest) + [Fraction(0)]


def mu_seq_bruteforce(weights, dofs):
    r = len(weights)
    loo = [loo_bruteforce(weights, i) for i in range(1, r + 1)]
    mus = [Fraction(0)] + [sum(Fraction(weights[i]) ** 2 * loo[i][k - 1] * dofs[i]
                               for i in range(r)) for k in range(1, r + 1)]
    return sum(Fraction(w) * m for w, m in zip(weights, dofs)), mus


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_eval(coeffs, x):
    return sum(Fraction(c) * x ** j for j, c in enumerate(coeffs))
