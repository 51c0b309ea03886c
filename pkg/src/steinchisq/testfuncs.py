"""Test functions with closed-form derivatives of every order.

Only families closed under differentiation are admitted, so the operator
never needs numerical differentiation:

* ``polynomial`` -- exact coefficients, usable in either mode;
* ``exponential`` -- ``a * exp(s x)``;
* ``sine`` / ``cosine`` -- ``a * sin(t x)`` / ``a * cos(t x)``.

The last three evaluate in float mode only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ModeUnsupported
from .polynomial import Polynomial
from .spec import WeightSpec, format_scalar, parse_scalar

FAMILIES = ("polynomial", "exponential", "sine", "cosine")


@dataclass(frozen=True)
class TestFunction:
    __test__ = False  # keep pytest from collecting this class

    family: str
    coeffs: tuple = ()
    param: float = 0.0
    amplitude: float = 1.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown test function family {self.family!r}")
        if self.family == "polynomial":
            if not self.coeffs:
                raise ValueError("polynomial needs at least one coefficient")
        elif not (math.isfinite(self.param) and math.isfinite(self.amplitude)):
            raise ValueError("test function parameters must be finite")

    @classmethod
    def polynomial(cls, coeffs, mode="exact"):
        coeffs = [parse_scalar(c, mode) for c in coeffs]
        return cls("polynomial", tuple(coeffs) or (parse_scalar(0, mode),))

    @classmethod
    def exponential(cls, s, amplitude=1.0):
        return cls("exponential", param=float(s), amplitude=float(amplitude))

    @classmethod
    def sine(cls, t, amplitude=1.0):
        return cls("sine", param=float(t), amplitude=float(amplitude))

    @classmethod
    def cosine(cls, t, amplitude=1.0):
        return cls("cosine", param=float(t), amplitude=float(amplitude))

    @property
    def is_polynomial(self) -> bool:
        return self.family == "polynomial"

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ModeUnsupported(f"{self.family} is not a polynomial")
        return Polynomial(self.coeffs)

    def __call__(self, x):
        return evaluate(self, x)

    def to_dict(self) -> dict:
        if self.is_polynomial:
            return {"family": "polynomial",
                    "coeffs": [format_scalar(c) for c in self.coeffs]}
        key = "scale" if self.family == "exponential" else "frequency"
        out = {"family": self.family, key: self.param}
        if self.amplitude != 1.0:
            out["amplitude"] = self.amplitude
        return out

    @classmethod
    def from_dict(cls, data, mode="exact"):
        family = data.get("family")
        if family == "polynomial":
            return cls.polynomial(data["coeffs"], mode)
        amp = float(data.get("amplitude", 1.0))
        if family == "exponential":
            return cls.exponential(float(data["scale"]), amp)
        if family in ("sine", "cosine"):
            return cls(family, param=float(data["frequency"]), amplitude=amp)
        raise ValueError(f"unknown test function family {family!r}")

    @classmethod
    def parse(cls, text, mode="exact"):
        """Parse the short command-line form.

        ``poly:0,1`` is x, ``exp:0.2`` is exp(0.2 x), ``sin:1`` and ``cos:1``
        are sin(x) and cos(x).
        """
        name, _, arg = text.partition(":")
        name = name.strip().lower()
        if name in ("poly", "polynomial"):
            return cls.polynomial(arg.split(","), mode)
        if name in ("exp", "exponential"):
            return cls.exponential(float(arg))
        if name in ("sin", "sine"):
            return cls.sine(float(arg))
        if name in ("cos", "cosine"):
            return cls.cosine(float(arg))
        raise ValueError(f"cannot parse test function {text!r}")


def derivative(f: TestFunction, k: int) -> TestFunction:
    """Closed-form k-th derivative, staying inside the family."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k == 0:
        return f
    if f.is_polynomial:
        d = Polynomial(f.coeffs).derivative(k)
        zero = 0 * f.coeffs[0]
        return TestFunction("polynomial", d.coeffs or (zero,))
    factor = f.param ** k
    if f.family == "exponential":
        return TestFunction("exponential", param=f.param,
                            amplitude=f.amplitude * factor)
    # sin -> cos -> -sin -> -cos -> sin
    steps = k % 4
    family, sign = f.family, 1.0
    for _ in range(steps):
        if family == "sine":
            family = "cosine"
        else:
            family, sign = "sine", -sign
    return TestFunction(family, param=f.param, amplitude=sign * f.amplitude * factor)


def derivatives(f: TestFunction, order: int):
    """``[f, f', ..., f^(order)]``."""
    out = [f]
    for _ in range(order):
        out.append(derivative(out[-1], 1))
    return out


def evaluate(f: TestFunction, x, cache=None):
    """Value of ``f`` at ``x``.

    ``x`` may be an int or Fraction (exact, polynomials only), a float, or a
    numpy array.  Polynomial coefficients are cast to float for float
    points so the result never silently becomes an object array.

    ``cache`` is an optional dict reused across calls at the *same* ``x``;
    it stores ``exp/sin/cos(param * x)`` so derivatives and related battery
    functions do not recompute them.
    """
    exact = isinstance(x, (int, Fraction)) and not isinstance(x, bool)
    if f.is_polynomial:
        if exact:
            acc = 0 * x
            for c in reversed(f.coeffs):
                acc = acc * x + c
            return acc
        coeffs = [float(c) for c in f.coeffs]
        if np.ndim(x) == 0:
            acc = 0.0
            for c in reversed(coeffs):
                acc = acc * x + c
            return float(acc)
        acc = np.full(np.shape(x), coeffs[-1])
        for c in reversed(coeffs[:-1]):
            acc *= x
            acc += c
        return acc
    if exact:
        raise ModeUnsupported(
            f"{f.family} test functions only evaluate in float mode")
    key = (f.family, f.param)
    val = None if cache is None else cache.get(key)
    if val is None:
        arg = f.param * np.asarray(x, dtype=float)
        if f.family == "exponential":
            val = np.exp(arg)
        elif f.family == "sine":
            val = np.sin(arg)
        else:
            val = np.cos(arg)
        if cache is not None:
            cache[key] = val
    val = f.amplitude * val
    return float(val) if np.ndim(val) == 0 else val


@dataclass(frozen=True)
class Violation:
    """Which weight broke a moment condition, and by how much."""

    index: int
    value: float
    bound: float = 1.0

    def __str__(self):
        return (f"weight {self.index}: {self.value:g} is not below "
                f"{self.bound:g}")


def integrability_check(f: TestFunction, spec: WeightSpec, factor=2):
    """Check the moment conditions needed for ``E[T f(U)] = 0``.

    Polynomials and trig functions always pass.  ``exp(s x)`` needs
    ``factor * s * lam_i < 1`` for every weight, the domain of each term's
    moment generating function at ``factor = 2``; ``factor = 4`` asks for a
    finite variance of ``exp(s U)`` instead.  Returns ``None`` when
    everything is fine, else the first :class:`Violation` (1-based index).
    """
    if f.family != "exponential":
        return None
    s = Fraction(f.param)
    for i, w in enumerate(spec.weights, start=1):
        value = factor * s * Fraction(w)
        if not value < 1:
            return Violation(i, float(value))
    return None
