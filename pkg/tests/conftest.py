from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from steinchisq import WeightSpec

SPEC_B = WeightSpec.create(["1", "2"], ["1", "1"])

_ACCEPTANCE_LINES = []


def random_specs(count, seed, max_r=6, weight_range=5, max_dof=10):
    """Random exact specs: distinct nonzero integer weights, integer dofs."""
    rng = np.random.default_rng(seed)
    pool = [w for w in range(-weight_range, weight_range + 1) if w != 0]
    specs = []
    for _ in range(count):
        r = int(rng.integers(1, max_r + 1))
        weights = [int(w) for w in rng.choice(pool, size=r, replace=False)]
        dofs = [int(m) for m in rng.integers(1, max_dof + 1, size=r)]
        specs.append(WeightSpec.create(weights, dofs))
    return specs


@st.composite
def specs(draw, max_r=8, weight_range=9, max_dof=10):
    pool = [w for w in range(-weight_range, weight_range + 1) if w != 0]
    weights = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_r,
                            unique=True))
    dofs = draw(st.lists(st.integers(1, max_dof), min_size=len(weights),
                         max_size=len(weights)))
    return WeightSpec.create(weights, dofs)


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=20)


@st.composite
def polynomials(draw, max_degree=8):
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5,
                                        max_denominator=6),
                           min_size=1, max_size=max_degree + 1))
    return coeffs


@pytest.fixture
def spec_b():
    return SPEC_B


def record_acceptance(line):
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
