"""Dense univariate polynomials over Fractions or floats."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .spec import format_scalar, parse_scalar


class Polynomial:
    """Polynomial with coefficients in ascending degree.

    Trailing zeros are stripped on construction, so the zero polynomial has
    ``coeffs == ()`` and ``degree == -1``.  Coefficients are used as given;
    mixing Fractions and floats in one polynomial is the caller's choice.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, d, c=1):
        return cls([0] * d + [c])

    @classmethod
    def parse(cls, items, mode="exact"):
        return cls(parse_scalar(c, mode) for c in items)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, float, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        n = max(len(self), len(other))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        if not self.coeffs:
            return x * 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, k=1):
        """k-th derivative; the zero polynomial once k exceeds the degree."""
        if k < 0:
            raise ValueError("derivative order must be nonnegative")
        coeffs = self.coeffs
        for _ in range(k):
            coeffs = [j * c for j, c in enumerate(coeffs)][1:]
        return Polynomial(coeffs)

    def shift(self, c):
        """The polynomial ``x -> self(x + c)``."""
        out = [0] * len(self)
        for j, a in enumerate(self.coeffs):
            for i in range(j + 1):
                out[i] += a * comb(j, i) * c ** (j - i)
        return Polynomial(out)

    def map(self, fn):
        return Polynomial(fn(c) for c in self.coeffs)

    def to_float(self):
        return self.map(float)

    def to_json(self):
        return [format_scalar(c) for c in self.coeffs]


X = Polynomial([0, 1])
