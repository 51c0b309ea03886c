"""Goodness-of-fit testing with the weighted chi-square Stein operator.

Under the hypothesized law every ``E[T f]`` is zero.  For each function in a
battery the data give a standardized mean ``mean(T f) / se(T f)``; the test
statistic is the largest absolute one.  Its null distribution is obtained by
a parametric bootstrap from the hypothesized law.

Only a necessary condition is tested: zero operator expectations over a
finite battery do not by themselves pin down the law.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .coefficients import build_table
from .errors import BadCount, NotIntegrable
from .simulation import (BOOTSTRAP_STREAM, default_shards, draw, map_shards,
                         operator_values, split, check_admissible)
from .spec import WeightSpec
from .testfuncs import TestFunction, integrability_check


class FunctionBattery(tuple):
    """Ordered, duplicate-free, nonempty tuple of test functions."""

    def __new__(cls, functions):
        functions = tuple(functions)
        if not functions:
            raise ValueError("a function battery cannot be empty")
        if len(set(functions)) != len(functions):
            raise ValueError("duplicate functions in battery")
        return super().__new__(cls, functions)

    def validate(self, spec: WeightSpec):
        for f in self:
            check_admissible(f, spec)
        return self


def default_battery(spec: WeightSpec) -> FunctionBattery:
    """x, x^2, x^3, sin x, cos x, and exp(s x) with s = 0.25 / max|lam| if admissible."""
    funcs = [TestFunction.polynomial(c) for c in ([0, 1], [0, 0, 1], [0, 0, 0, 1])]
    funcs += [TestFunction.sine(1.0), TestFunction.cosine(1.0)]
    s = 0.25 / max(abs(float(w)) for w in spec.weights)
    expo = TestFunction.exponential(s)
    if integrability_check(expo, spec, factor=4) is None:
        funcs.append(expo)
    return FunctionBattery(funcs)


def _standardized(values):
    """mean / se along the last axis; 0/0 counts as 0, c/0 as inf."""
    n = values.shape[-1]
    mean = values.mean(axis=-1)
    se = values.std(axis=-1, ddof=1) / np.sqrt(n)
    with np.errstate(divide="ignore", invalid="ignore"):
        z = mean / se
    z = np.where(se > 0, z, np.where(mean == 0, 0.0, np.copysign(np.inf, mean)))
    return z


def _statistics(x, table, battery, centered):
    cache = {}
    z = np.stack([_standardized(operator_values(table, f, x, centered, cache))
                  for f in battery])
    return np.max(np.abs(z), axis=0), z


def stein_statistic(data, spec: WeightSpec, battery=None, centered=True):
    """``(statistic, per_function)`` for observations ``data`` of ``U``.

    In centered mode the data are shifted by the hypothesized mean before
    the centered operator is applied; otherwise the non-centered operator
    is applied to the raw data.
    """
    x = np.asarray(data, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise BadCount("need a one-dimensional sample with at least two points")
    battery = FunctionBattery(battery or default_battery(spec))
    battery.validate(spec)
    table = build_table(spec.to_float())
    stat, z = _statistics(x, table, battery, centered)
    return float(stat), [float(v) for v in z]


def bootstrap_pvalue_from(observed, replicates) -> float:
    """``(1 + #{replicate >= observed}) / (B + 1)``."""
    replicates = np.asarray(replicates, dtype=float)
    return (1 + int(np.count_nonzero(replicates >= observed))) / (replicates.size + 1)


def null_statistics(spec, n, battery, centered=True, B=999, seed=0,
                    shards=None, workers=None):
    """Statistics of ``B`` datasets of size ``n`` drawn from ``spec``.

    Replicates are dealt to shards in contiguous blocks; each shard draws its
    block from its own bootstrap substream.
    """
    shards = shards or default_shards()
    battery = FunctionBattery(battery)
    table = build_table(spec.to_float())
    fspec = spec.to_float()
    sizes = split(B, shards)

    def work(gen, s):
        if sizes[s] == 0:
            return np.empty(0)
        x = draw(gen, fspec, (sizes[s], n))
        return _statistics(x, table, battery, centered)[0]

    return np.concatenate(map_shards(work, seed, shards, BOOTSTRAP_STREAM, workers))


@dataclass(frozen=True)
class GofResult:
    statistic: float
    pvalue: float
    per_function: list
    B: int
    seed: int
    shards: int
    centered: bool = True
    spec: WeightSpec | None = None
    battery: tuple = field(default=())

    def rejects(self, level=0.05) -> bool:
        return self.pvalue <= level

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "pvalue": self.pvalue,
            "per_function": [
                {"function": f.to_dict(), "standardized_mean": z}
                for f, z in zip(self.battery, self.per_function)],
            "B": self.B,
            "seed": self.seed,
            "shards": self.shards,
            "centered": self.centered,
            "spec": self.spec.to_dict() if self.spec is not None else None,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def bootstrap_pvalue(data, spec: WeightSpec, battery=None, centered=True,
                     B=999, seed=0, shards=None, workers=None) -> GofResult:
    """Parametric bootstrap test of ``data ~ spec``."""
    if B < 99:
        raise BadCount(f"need at least 99 bootstrap replicates, got {B}")
    shards = shards or default_shards()
    battery = FunctionBattery(battery or default_battery(spec))
    stat, per = stein_statistic(data, spec, battery, centered)
    reps = null_statistics(spec, len(data), battery, centered, B, seed,
                           shards, workers)
    return GofResult(stat, bootstrap_pvalue_from(stat, reps), per, B,
                     int(seed), shards, centered, spec, tuple(battery))


__all__ = [
    "FunctionBattery", "GofResult", "NotIntegrable", "bootstrap_pvalue",
    "bootstrap_pvalue_from", "default_battery", "null_statistics",
    "stein_statistic",
]
