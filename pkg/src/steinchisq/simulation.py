"""Monte Carlo sampling of weighted chi-square sums.

Randomness is split into ``shards`` logical substreams.  Shard ``s`` of a run
seeded with ``seed`` uses a Philox counter-based generator keyed by
``SeedSequence(seed, spawn_key=(stream, s))``, where ``stream`` separates
independent uses of the same seed (data sampling vs. bootstrap replicates).
Work is assigned to shards by index, never by thread, so the output is a
pure function of ``(seed, shards)`` however many workers run it.

Each ``Q_i ~ chi2(m_i)`` is drawn as ``2 * Gamma(m_i / 2)`` using numpy's
``standard_gamma`` (Marsaglia-Tsang squeeze/rejection for shape >= 1, the
``U**(1/a)`` boost for shape < 1).
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .coefficients import build_table
from .errors import BadCount, NotIntegrable
from .spec import WeightSpec
from .stein import apply_centered, apply_noncentered
from .testfuncs import TestFunction, integrability_check

DEFAULT_SHARDS = 16
DEFAULT_N = 10**6
DEFAULT_SIGMAS = 4.0

SAMPLE_STREAM = 0
BOOTSTRAP_STREAM = 1


def default_shards() -> int:
    return int(os.environ.get("STEINCHISQ_SHARDS", DEFAULT_SHARDS))


def shard_generator(seed: int, shard: int, stream: int = SAMPLE_STREAM):
    ss = np.random.SeedSequence(int(seed), spawn_key=(stream, shard))
    return np.random.Generator(np.random.Philox(ss))


def split(n: int, shards: int):
    """Sizes of ``shards`` contiguous blocks covering ``n`` items."""
    base, extra = divmod(n, shards)
    return [base + (s < extra) for s in range(shards)]


def map_shards(fn, seed, shards, stream=SAMPLE_STREAM, workers=None):
    """``[fn(generator_s, s) for s in range(shards)]``, possibly threaded.

    The result order is shard order regardless of ``workers``.
    """
    if shards < 1:
        raise BadCount(f"shards must be positive, got {shards}")

    def run(s):
        return fn(shard_generator(seed, s, stream), s)

    workers = workers or 1
    if workers == 1 or shards == 1:
        return [run(s) for s in range(shards)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, range(shards)))


def draw(gen: np.random.Generator, spec: WeightSpec, size):
    """Draws of ``U`` with the given shape from one generator."""
    out = np.zeros(size)
    for w, m in zip(spec.weights, spec.dofs):
        out += (2.0 * float(w)) * gen.standard_gamma(float(m) / 2.0, size)
    return out


def sample(spec: WeightSpec, n: int, seed: int, shards=None, workers=None):
    """``n`` independent draws of ``U`` as a float array."""
    if n < 1:
        raise BadCount(f"sample size must be positive, got {n}")
    shards = shards or default_shards()
    spec = spec.to_float()
    sizes = split(n, shards)
    parts = map_shards(lambda gen, s: draw(gen, spec, sizes[s]),
                       seed, shards, SAMPLE_STREAM, workers)
    return np.concatenate(parts)


def write_csv(samples, fh):
    """One value per line, 17 significant digits."""
    for x in np.asarray(samples, dtype=float):
        fh.write(f"{x:.17g}\n")


def read_csv(fh):
    values = []
    for line in fh:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        first = line.split(",")[0]
        try:
            values.append(float(first))
        except ValueError:
            if values:
                raise
            continue  # header row
    return np.asarray(values, dtype=float)


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    std_error: float
    n: int
    seed: int
    shards: int

    def within(self, sigmas=DEFAULT_SIGMAS) -> bool:
        return abs(self.mean) <= sigmas * self.std_error

    def to_dict(self, sigmas=DEFAULT_SIGMAS) -> dict:
        out = asdict(self)
        out["within_4se" if sigmas == 4 else f"within_{sigmas:g}se"] = self.within(sigmas)
        return out


def operator_values(table, f: TestFunction, x, centered=True, cache=None):
    """Operator image evaluated at draws ``x`` of ``U`` (float table).

    In centered mode the operator sees ``x - mu``; a shared ``cache`` is
    keyed to that shifted point, so do not mix modes within one cache.
    """
    if centered:
        return apply_centered(table, f, x - table.mu, cache)
    return apply_noncentered(table, f, x, cache)


def check_admissible(f: TestFunction, spec: WeightSpec):
    """Raise :class:`NotIntegrable` unless ``T f(U)`` has a finite variance."""
    bad = integrability_check(f, spec)
    if bad is not None:
        raise NotIntegrable(f"E[exp(sU)] diverges at {bad}", bad.index)
    bad = integrability_check(f, spec, factor=4)
    if bad is not None:
        raise NotIntegrable(f"exp(sU) has infinite variance at {bad}",
                            bad.index)


def mc_expect_operator(spec: WeightSpec, f: TestFunction, centered=True,
                       n=DEFAULT_N, seed=0, shards=None, workers=None):
    """Monte Carlo estimate of ``E[T f]``, which should be zero."""
    if n < 2:
        raise BadCount(f"need at least two draws, got {n}")
    check_admissible(f, spec)
    shards = shards or default_shards()
    table = build_table(spec.to_float())
    x = sample(spec, n, seed, shards, workers)
    values = operator_values(table, f, x, centered)
    # one array in shard order; numpy's pairwise sum fixes the reduction order
    mean = float(np.mean(values))
    se = float(np.std(values, ddof=1) / np.sqrt(n))
    return MCEstimate(mean, se, n, int(seed), shards)
