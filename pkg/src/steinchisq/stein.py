"""Characterizing operators for weighted sums of chi-square variables.

Centered form, for ``U~ = U - mu``::

    T f(x) = sum_{k=0}^{r} (-2)**k * (mu_k + Lambda_k * x) * f^(k)(x)

Non-centered form, for ``U`` itself::

    T f(x) = sum_{k=0}^{r} (-2)**k * (mu_k + Lambda_k * x - Lambda_k * mu) * f^(k)(x)

Both have zero expectation under the target law.  With a single unit weight
and ``p`` degrees of freedom the centered form is ``x f(x) - 2 (x + p) f'(x)``,
the negative of the classical one-chi-square operator
:func:`single_chisq_operator`.
"""
from __future__ import annotations

from fractions import Fraction

from .coefficients import CoefficientTable
from .errors import ModeUnsupported
from .polynomial import Polynomial
from .testfuncs import TestFunction, derivatives, evaluate


def _check_point(table: CoefficientTable, f: TestFunction, x):
    exact_x = isinstance(x, (int, Fraction)) and not isinstance(x, bool)
    if table.mode == "exact":
        if not f.is_polynomial:
            raise ModeUnsupported(
                f"exact table with a {f.family} test function; "
                "convert the spec with to_float()")
        if not exact_x:
            raise ModeUnsupported("exact table evaluated at a float point")
    elif exact_x:
        raise ModeUnsupported("float table evaluated at an exact point")


def _apply(table, f, x, shift, cache):
    _check_point(table, f, x)
    if cache is None:
        cache = {}
    total = 0 * x
    # each f^(k) is materialized once; (-2)**k is an exact int applied last
    for k, fk in enumerate(derivatives(f, table.r)):
        if fk.is_polynomial and not any(fk.coeffs):
            break
        lam_k = table.lambda_full[k]
        offset = table.mu_seq[k] - lam_k * shift
        total = total + (-2) ** k * ((offset + lam_k * x) * evaluate(fk, x, cache))
    return total


def apply_centered(table: CoefficientTable, f: TestFunction, x, cache=None):
    """Centered operator image ``T f(x)``.

    ``x`` may be a numpy array in float mode.  ``cache`` is passed on to
    :func:`~steinchisq.testfuncs.evaluate` and must only be shared between
    calls at the same ``x``.
    """
    return _apply(table, f, x, 0 * table.mu, cache)


def apply_noncentered(table: CoefficientTable, f: TestFunction, x, cache=None):
    return _apply(table, f, x, table.mu, cache)


def operator_polynomial(table: CoefficientTable, f, centered=True) -> Polynomial:
    """Exact polynomial ``x -> T f(x)`` for a polynomial ``f``.

    ``f`` may be a :class:`Polynomial` or a polynomial :class:`TestFunction`.
    The result has degree ``deg f + 1`` (the ``k = 0`` term contributes
    ``x f(x)`` and nothing else reaches that degree).
    """
    if isinstance(f, TestFunction):
        f = f.as_polynomial()
    shift = 0 * table.mu if centered else table.mu
    out = Polynomial()
    fk = f
    for k in range(table.r + 1):
        if fk.is_zero():
            break
        lam_k = table.lambda_full[k]
        factor = Polynomial([table.mu_seq[k] - lam_k * shift, lam_k])
        out = out + (factor * fk) * (-2) ** k
        fk = fk.derivative()
    return out


def single_chisq_operator(p, f: TestFunction, x):
    """``2 (x + p) f'(x) - x f(x)``, the operator of the centered chi2(p) law."""
    if not p > 0:
        raise ValueError("degrees of freedom must be positive")
    f0, f1 = derivatives(f, 1)
    return 2 * (x + p) * evaluate(f1, x) - x * evaluate(f0, x)
