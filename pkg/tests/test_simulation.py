import io

import numpy as np
import pytest

from steinchisq import (TestFunction, WeightSpec, central_moments,
                        mc_expect_operator, sample)
from steinchisq.errors import BadCount, NotIntegrable
from steinchisq.simulation import MCEstimate, read_csv, split, write_csv

from conftest import SPEC_B


def test_positive_weights_give_positive_draws():
    x = sample(WeightSpec.create([0.5, 2, 3], [1, 1, 4]), 20000, seed=3)
    assert x.shape == (20000,)
    assert np.all(x > 0)


def test_sample_mean_clt_bound():
    x = sample(SPEC_B, 10**6, seed=2024)
    se = x.std(ddof=1) / np.sqrt(x.size)
    assert abs(x.mean() - 3.0) <= 4 * se


def test_sample_is_deterministic():
    a = sample(SPEC_B, 1001, seed=9, shards=7)
    b = sample(SPEC_B, 1001, seed=9, shards=7)
    assert a.tobytes() == b.tobytes()
    assert sample(SPEC_B, 1001, seed=10, shards=7).tobytes() != a.tobytes()


@pytest.mark.parametrize("workers", [2, 4, 16])
def test_workers_do_not_change_output(workers):
    ref = sample(SPEC_B, 5003, seed=1, shards=16, workers=1)
    got = sample(SPEC_B, 5003, seed=1, shards=16, workers=workers)
    assert ref.tobytes() == got.tobytes()


def test_shard_split_covers_n():
    assert split(10, 4) == [3, 3, 2, 2]
    assert sum(split(7, 16)) == 7


def test_exact_and_float_spec_sample_identically():
    a = sample(SPEC_B, 100, seed=5)
    b = sample(SPEC_B.to_float(), 100, seed=5)
    assert a.tobytes() == b.tobytes()


def test_bad_counts():
    with pytest.raises(BadCount):
        sample(SPEC_B, 0, seed=1)
    with pytest.raises(BadCount):
        mc_expect_operator(SPEC_B, TestFunction.polynomial([0, 1]), n=1, seed=1)


def test_csv_roundtrip_is_lossless():
    x = sample(SPEC_B, 50, seed=4)
    buf = io.StringIO()
    buf.write("# seed=4 shards=16\n")
    write_csv(x, buf)
    lines = buf.getvalue().splitlines()
    assert len(lines) == 51
    assert read_csv(io.StringIO(buf.getvalue())).tobytes() == x.tobytes()


def test_mc_linear_function():
    est = mc_expect_operator(SPEC_B, TestFunction.polynomial([0, 1]),
                             n=10**6, seed=11)
    assert isinstance(est, MCEstimate)
    assert est.n == 10**6 and est.seed == 11 and est.shards == 16
    assert abs(est.mean) <= 4 * est.std_error
    assert est.within()


def test_mc_sine_three_weights():
    spec = WeightSpec.create([1, 2, 3], [1, 1, 1])
    est = mc_expect_operator(spec, TestFunction.sine(1.0), n=10**6, seed=12)
    assert abs(est.mean) <= 4 * est.std_error


def test_mc_constant_estimates_centered_mean():
    est = mc_expect_operator(SPEC_B, TestFunction.polynomial([1]), n=10**5, seed=13)
    x = sample(SPEC_B, 10**5, seed=13) - 3.0
    assert est.mean == pytest.approx(x.mean(), rel=1e-12)
    assert est.std_error == pytest.approx(x.std(ddof=1) / np.sqrt(x.size), rel=1e-12)
    assert abs(est.mean) <= 4 * est.std_error


def test_mc_noncentered():
    est = mc_expect_operator(SPEC_B, TestFunction.polynomial([0, 0, 1]),
                             centered=False, n=10**6, seed=14)
    assert est.within()


def test_mc_rejects_non_integrable_exponential():
    with pytest.raises(NotIntegrable) as info:
        mc_expect_operator(SPEC_B, TestFunction.exponential(0.25), n=100, seed=1)
    assert info.value.index == 2
    # integrable but infinite variance: 4 * 0.2 * 2 >= 1
    with pytest.raises(NotIntegrable) as info:
        mc_expect_operator(SPEC_B, TestFunction.exponential(0.2), n=100, seed=1)
    assert info.value.index == 2


def test_mc_reproducible():
    f = TestFunction.cosine(0.5)
    a = mc_expect_operator(SPEC_B, f, n=10**4, seed=3, shards=5)
    b = mc_expect_operator(SPEC_B, f, n=10**4, seed=3, shards=5, workers=3)
    assert a == b


def test_sample_central_moments_match_oracle():
    spec = WeightSpec.create([1, -2, 0.5], [3, 1, 2])
    exact = central_moments(spec.to_exact(), 4)
    x = sample(spec, 10**6, seed=77) - float(spec.mean)
    for j in range(2, 5):
        powers = x ** j
        se = powers.std(ddof=1) / np.sqrt(x.size)
        assert abs(powers.mean() - float(exact[j])) <= 5 * se, j
