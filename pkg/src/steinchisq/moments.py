"""Exact moments of weighted chi-square sums, and the zero-expectation checks.

Everything here is rational arithmetic.  Two independent routes to the
central moments are provided, :func:`central_moments` (cumulant recursion)
and :func:`central_moments_direct` (multinomial expansion over the
independent summands), so each can audit the other.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .coefficients import CoefficientTable, build_table
from .errors import BadOrder, LemmaViolation, ModeUnsupported, TheoremViolation
from .polynomial import X, Polynomial
from .spec import WeightSpec
from .stein import operator_polynomial


def _require_exact(spec: WeightSpec):
    if spec.mode != "exact":
        raise ModeUnsupported(
            "moment oracle runs in exact mode; convert with spec.to_exact()")


def chisq_raw_moments(p, n):
    """``[E Q**0, ..., E Q**n]`` for ``Q ~ chi2(p)``: ``E Q**j = p (p+2) ... (p+2j-2)``."""
    if n < 0:
        raise BadOrder(f"moment order must be nonnegative, got {n}")
    p = Fraction(p)
    out = [Fraction(1)]
    for j in range(1, n + 1):
        out.append(out[-1] * (p + 2 * (j - 1)))
    return out


def cumulants(spec: WeightSpec, n):
    """``[kappa_1, ..., kappa_n]`` with ``kappa_j = 2**(j-1) (j-1)! sum_i lam_i**j m_i``."""
    _require_exact(spec)
    if n < 1:
        raise BadOrder(f"cumulant order must be at least 1, got {n}")
    return [2 ** (j - 1) * factorial(j - 1)
            * sum(w ** j * m for w, m in zip(spec.weights, spec.dofs))
            for j in range(1, n + 1)]


def moments_from_cumulants(kappas, n):
    """Raw moments ``[m_0..m_n]`` from cumulants ``[kappa_1..]``.

    ``m_j = sum_{a=0}^{j-1} C(j-1, a) kappa_{a+1} m_{j-1-a}``.
    """
    m = [Fraction(1)]
    for j in range(1, n + 1):
        m.append(sum(comb(j - 1, a) * kappas[a] * m[j - 1 - a]
                     for a in range(j)))
    return m


def central_moments(spec: WeightSpec, n):
    """``[E U~**0, ..., E U~**n]`` via the cumulant recursion with ``kappa_1 = 0``."""
    _require_exact(spec)
    if n < 0:
        raise BadOrder(f"moment order must be nonnegative, got {n}")
    if n == 0:
        return [Fraction(1)]
    kappas = cumulants(spec, n)
    kappas[0] = Fraction(0)
    return moments_from_cumulants(kappas, n)


def central_moments_direct(spec: WeightSpec, n):
    """Same as :func:`central_moments`, by brute-force multinomial expansion.

    ``E (sum_i lam_i (Q_i - m_i))**j`` expanded over all compositions of
    ``j`` and evaluated with per-summand chi-square central moments.
    Cost grows like ``C(j + r - 1, r - 1)``; meant for small ``r`` and ``j``.
    """
    _require_exact(spec)
    if n < 0:
        raise BadOrder(f"moment order must be nonnegative, got {n}")
    per = []
    for m in spec.dofs:
        raw = chisq_raw_moments(m, n)
        per.append([sum(comb(a, b) * raw[b] * (-m) ** (a - b)
                        for b in range(a + 1)) for a in range(n + 1)])
    r = spec.r
    out = []
    for j in range(n + 1):
        total = Fraction(0)
        for parts in _compositions(j, r):
            coef = factorial(j)
            term = Fraction(1)
            for i, a in enumerate(parts):
                coef //= factorial(a)
                term *= spec.weights[i] ** a * per[i][a]
            total += coef * term
        out.append(total)
    return out


def _compositions(total, parts):
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


@dataclass(frozen=True)
class MomentTable:
    spec: WeightSpec
    cumulants: tuple
    central_moments: tuple
    raw_moments: tuple

    @property
    def order(self) -> int:
        return len(self.raw_moments) - 1


@lru_cache(maxsize=256)
def moment_table(spec: WeightSpec, order: int) -> MomentTable:
    """Cached cumulants and central/raw moments of ``U`` up to ``order``."""
    _require_exact(spec)
    if order < 0:
        raise BadOrder(f"moment order must be nonnegative, got {order}")
    kappas = cumulants(spec, order) if order else []
    central = central_moments(spec, order)
    mu = spec.mean
    raw = [sum(comb(j, a) * central[a] * mu ** (j - a) for a in range(j + 1))
           for j in range(order + 1)]
    return MomentTable(spec, tuple(kappas), tuple(central), tuple(raw))


def expect_polynomial(spec: WeightSpec, f, centered=True):
    """Exact ``E f(U~)`` (centered) or ``E f(U)``."""
    if not isinstance(f, Polynomial):
        f = f.as_polynomial()
    if f.is_zero():
        return Fraction(0)
    table = moment_table(spec, f.degree)
    moments = table.central_moments if centered else table.raw_moments
    return sum((Fraction(c) * moments[j] for j, c in enumerate(f.coeffs)),
               Fraction(0))


def operator_expectation(spec: WeightSpec, f, centered=True,
                         table: CoefficientTable | None = None):
    """``E[T f]`` under the law of ``spec``, without raising on a nonzero value."""
    _require_exact(spec)
    if table is None:
        table = build_table(spec)
    image = operator_polynomial(table, f, centered)
    return expect_polynomial(spec, image, centered)


def expect_operator(spec: WeightSpec, f, centered=True,
                    table: CoefficientTable | None = None):
    """Exact ``E[T f(U~)]`` (or ``E[T f(U)]``), which must be zero.

    Raises :class:`TheoremViolation` otherwise.  ``table`` defaults to the
    one built from ``spec``; passing another one is how the checks are
    exercised against a deliberately wrong table.
    """
    value = operator_expectation(spec, f, centered, table)
    if value != 0:
        kind = "centered" if centered else "non-centered"
        raise TheoremViolation(
            f"{kind} E[T f] = {value} for f = {f!r}, spec {spec.to_dict()}")
    return value


def ibp_defect(p, f):
    """``E[(Q - p) f(Q)] - E[2 Q f'(Q)]`` for ``Q ~ chi2(p)``."""
    if not isinstance(f, Polynomial):
        f = f.as_polynomial()
    p = Fraction(p)
    if not p > 0:
        raise ValueError("degrees of freedom must be positive")
    g = (X - p) * f - 2 * X * f.derivative()
    moments = chisq_raw_moments(p, max(g.degree, 0))
    return sum((Fraction(c) * moments[j] for j, c in enumerate(g.coeffs)),
               Fraction(0))


def verify_ibp(p, f):
    """Exact integration-by-parts defect for ``chi2(p)``; raises unless zero."""
    value = ibp_defect(p, f)
    if value != 0:
        raise LemmaViolation(f"E[(Q-p)f(Q)] - E[2Qf'(Q)] = {value} for p={p}")
    return value
