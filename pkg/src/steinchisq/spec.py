"""Weight specifications and the scalar field they live in.

A computation runs either in ``"exact"`` mode, where every scalar is a
:class:`fractions.Fraction`, or in ``"float"`` mode, where every scalar is a
Python float (numpy arrays are accepted wherever a float point is).
Converting between the two is always explicit, see
:meth:`WeightSpec.to_float` and :meth:`WeightSpec.to_exact`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .errors import EmptySpec, InvalidDof, InvalidWeight

MODES = ("exact", "float")


def parse_scalar(value, mode="exact"):
    """Parse ``"3"``, ``"-1/2"``, ``"0.25"``, an int, a Fraction or a float.

    Decimal strings are read exactly in exact mode (``"0.1"`` is 1/10, not the
    nearest double).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, str):
        q = Fraction(value.strip())
        return q if mode == "exact" else float(q)
    if isinstance(value, (int, Rational)):
        return Fraction(value) if mode == "exact" else float(value)
    if isinstance(value, float):
        return Fraction(value) if mode == "exact" else value
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def format_scalar(value) -> str:
    """Inverse of :func:`parse_scalar` for serialization.

    Fractions render as ``"p/q"`` (or ``"p"``), floats with ``repr`` so they
    round-trip.
    """
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def scalar_mode(value) -> str:
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return "exact"
    return "float"


@dataclass(frozen=True)
class WeightSpec:
    """Law of ``U = sum_i weights[i] * Q_i`` with ``Q_i ~ chi2(dofs[i])``.

    Build instances with :meth:`create` (or :meth:`from_json`), which
    validates the input and merges repeated weights.  ``merged_from[j]`` lists
    the 1-based positions in the original input that were folded into
    canonical weight ``j``.
    """

    weights: tuple
    dofs: tuple
    mode: str = "exact"
    merged_from: tuple = field(default=(), compare=False)

    @property
    def r(self) -> int:
        return len(self.weights)

    @property
    def was_merged(self) -> bool:
        return any(len(g) > 1 for g in self.merged_from)

    @classmethod
    def create(cls, weights, dofs, mode="exact"):
        weights = [parse_scalar(w, mode) for w in weights]
        dofs = [parse_scalar(m, mode) for m in dofs]
        if not weights:
            raise EmptySpec("a weight specification needs at least one weight")
        if len(weights) != len(dofs):
            raise ValueError(
                f"{len(weights)} weights but {len(dofs)} degrees of freedom")
        for i, w in enumerate(weights, start=1):
            if w == 0:
                raise InvalidWeight(f"weight {i} is zero")
            if mode == "float" and not _finite(w):
                raise InvalidWeight(f"weight {i} is not finite")
        for i, m in enumerate(dofs, start=1):
            if not m > 0 or (mode == "float" and not _finite(m)):
                raise InvalidDof(
                    f"degrees of freedom {i} must be positive, got {m}")

        # lambda*chi2(a) + lambda*chi2(b) has the law of lambda*chi2(a + b)
        canon_w, canon_m, groups = [], [], []
        position = {}
        for i, (w, m) in enumerate(zip(weights, dofs), start=1):
            j = position.get(w)
            if j is None:
                position[w] = len(canon_w)
                canon_w.append(w)
                canon_m.append(m)
                groups.append([i])
            else:
                canon_m[j] += m
                groups[j].append(i)
        return cls(tuple(canon_w), tuple(canon_m), mode,
                   tuple(tuple(g) for g in groups))

    @classmethod
    def from_dict(cls, data, mode=None):
        if not isinstance(data, dict):
            raise ValueError("spec JSON must be an object")
        try:
            weights, dofs = data["weights"], data["dofs"]
        except KeyError as exc:
            raise ValueError(f"spec JSON is missing {exc.args[0]!r}") from None
        mode = mode or data.get("mode", "exact")
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        return cls.create(weights, dofs, mode)

    @classmethod
    def from_json(cls, text, mode=None):
        return cls.from_dict(json.loads(text), mode=mode)

    def to_dict(self) -> dict:
        out = {
            "weights": [format_scalar(w) for w in self.weights],
            "dofs": [format_scalar(m) for m in self.dofs],
            "mode": self.mode,
        }
        if self.was_merged:
            out["merged_from"] = [list(g) for g in self.merged_from]
        return out

    def to_float(self) -> "WeightSpec":
        if self.mode == "float":
            return self
        return WeightSpec(tuple(float(w) for w in self.weights),
                          tuple(float(m) for m in self.dofs),
                          "float", self.merged_from)

    def to_exact(self) -> "WeightSpec":
        if self.mode == "exact":
            return self
        return WeightSpec(tuple(Fraction(w) for w in self.weights),
                          tuple(Fraction(m) for m in self.dofs),
                          "exact", self.merged_from)

    def scaled(self, c) -> "WeightSpec":
        """Every weight multiplied by ``c``; dofs unchanged."""
        return WeightSpec.create([c * w for w in self.weights], self.dofs,
                                 self.mode)

    @property
    def mean(self):
        return sum(w * m for w, m in zip(self.weights, self.dofs))


def _finite(x) -> bool:
    return x == x and abs(x) != float("inf")
