"""Elementary symmetric coefficients of the weighted chi-square Stein operator.

For weights ``lam_1..lam_r`` the operator needs

* ``Lambda_k``: the k-th elementary symmetric polynomial of all weights,
* ``Lambda_{k,i}``: the same with weight ``i`` left out,
* ``mu_k = sum_i lam_i**2 * Lambda_{k-1,i} * m_i`` (``mu_0 = 0``),
* ``mu = sum_i lam_i * m_i``, the mean of U.

Indices ``i`` are 1-based throughout the public API to match the usual
notation; ``table.lambda_loo[i - 1][k]`` holds ``Lambda_{k,i}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import BadIndex, EmptySpec, InternalInconsistency, InvalidWeight
from .spec import WeightSpec, format_scalar


def elementary_symmetric(weights):
    """Return ``[Lambda_0, ..., Lambda_r]`` for the given weights.

    One pass of ``e_k <- e_k + w * e_{k-1}`` per weight, k descending, which
    only ever adds products of inputs (no division), so exact inputs give
    exact outputs.

    >>> elementary_symmetric([1, 2, 3])
    [1, 6, 11, 6]
    """
    weights = list(weights)
    if not weights:
        raise EmptySpec("no weights given")
    for i, w in enumerate(weights, start=1):
        if w == 0:
            raise InvalidWeight(f"weight {i} is zero")
    return _esp(weights)


def _esp(weights):
    one = weights[0] ** 0 if weights else 1
    e = [one] + [0 * one] * len(weights)
    for j, w in enumerate(weights, start=1):
        for k in range(j, 0, -1):
            e[k] = e[k] + w * e[k - 1]
    return e


def leave_one_out(weights, i):
    """Return ``[Lambda_{0,i}, ..., Lambda_{r,i}]`` (1-based ``i``).

    Recomputed from the remaining weights rather than deflated from the full
    polynomial; deflation loses accuracy in float mode for large ``|lam_i|``.
    The last entry is always zero.
    """
    weights = list(weights)
    if not weights:
        raise EmptySpec("no weights given")
    if not 1 <= i <= len(weights):
        raise BadIndex(f"index {i} outside 1..{len(weights)}")
    for j, w in enumerate(weights, start=1):
        if w == 0:
            raise InvalidWeight(f"weight {j} is zero")
    rest = weights[:i - 1] + weights[i:]
    if rest:
        e = _esp(rest)
    else:
        e = [weights[0] ** 0]
    return e + [0 * e[0]]


def mu_sequence(spec: WeightSpec):
    """Return ``(mu, [mu_0, ..., mu_r])`` for ``spec``."""
    loo = [leave_one_out(spec.weights, i) for i in range(1, spec.r + 1)]
    return _mu_from_loo(spec, loo)


def _mu_from_loo(spec, loo):
    zero = 0 * spec.weights[0]
    mus = [zero]
    for k in range(1, spec.r + 1):
        acc = zero
        for i, (w, m) in enumerate(zip(spec.weights, spec.dofs)):
            acc += w * w * loo[i][k - 1] * m
        mus.append(acc)
    mu = zero
    for w, m in zip(spec.weights, spec.dofs):
        mu += w * m
    return mu, mus


@dataclass(frozen=True)
class CoefficientTable:
    spec: WeightSpec
    lambda_full: tuple
    lambda_loo: tuple
    mu_seq: tuple
    mu: object

    @property
    def r(self) -> int:
        return self.spec.r

    @property
    def mode(self) -> str:
        return self.spec.mode

    def loo(self, k, i):
        """``Lambda_{k,i}`` with 1-based ``i``."""
        return self.lambda_loo[i - 1][k]

    def check(self):
        """Evaluate every structural identity the table must satisfy.

        Returns a list of ``(name, ok)`` pairs.  Comparisons are exact, so in
        float mode a ``False`` may just be rounding; :func:`build_table` only
        enforces them in exact mode.
        """
        r, lam = self.r, self.spec.weights
        L, loo, mus = self.lambda_full, self.lambda_loo, self.mu_seq
        checks = [
            ("Lambda_0 = 1", L[0] == 1),
            ("Lambda_{0,i} = 1", all(row[0] == 1 for row in loo)),
            ("Lambda_{r,i} = 0", all(row[r] == 0 for row in loo)),
            ("mu_0 = 0", mus[0] == 0),
            ("mu_r = Lambda_r * mu", mus[r] == L[r] * self.mu),
            ("Lambda_k - Lambda_{k-1,i} lambda_i = Lambda_{k,i}",
             all(L[k] - loo[i][k - 1] * lam[i] == loo[i][k]
                 for i in range(r) for k in range(1, r + 1))),
            ("sum_i Lambda_{k,i} lambda_i = (k+1) Lambda_{k+1}",
             all(sum(loo[i][k] * lam[i] for i in range(r)) == (k + 1) * L[k + 1]
                 for k in range(r))),
            ("sum_i Lambda_{k,i} = (r-k) Lambda_k",
             all(sum(loo[i][k] for i in range(r)) == (r - k) * L[k]
                 for k in range(r + 1))),
        ]
        return checks

    def violations(self):
        return [name for name, ok in self.check() if not ok]

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "lambda_full": [format_scalar(v) for v in self.lambda_full],
            "lambda_loo": [[format_scalar(v) for v in row]
                           for row in self.lambda_loo],
            "mu_seq": [format_scalar(v) for v in self.mu_seq],
            "mu": format_scalar(self.mu),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def build_table(spec: WeightSpec, check=True) -> CoefficientTable:
    """Assemble all operator coefficients for ``spec``.

    In exact mode the identities from :meth:`CoefficientTable.check` are
    asserted and any failure raises :class:`InternalInconsistency`.
    """
    lam_full = elementary_symmetric(spec.weights)
    loo = [leave_one_out(spec.weights, i) for i in range(1, spec.r + 1)]
    mu, mus = _mu_from_loo(spec, loo)
    table = CoefficientTable(spec, tuple(lam_full),
                             tuple(tuple(row) for row in loo),
                             tuple(mus), mu)
    if check and spec.mode == "exact":
        bad = table.violations()
        if bad:
            raise InternalInconsistency("; ".join(bad))
    return table
