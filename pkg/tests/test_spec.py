import json
from fractions import Fraction

import pytest

from steinchisq import WeightSpec
from steinchisq.errors import EmptySpec, InvalidDof, InvalidWeight
from steinchisq.spec import format_scalar, parse_scalar


@pytest.mark.parametrize("text, expected", [
    ("3", Fraction(3)),
    ("-1/2", Fraction(-1, 2)),
    ("0.1", Fraction(1, 10)),
    (" 7/14 ", Fraction(1, 2)),
])
def test_parse_exact(text, expected):
    assert parse_scalar(text) == expected
    assert isinstance(parse_scalar(text), Fraction)


def test_parse_float():
    assert parse_scalar("-1/4", "float") == -0.25
    assert isinstance(parse_scalar(3, "float"), float)


def test_format_roundtrip():
    for q in [Fraction(-3, 7), Fraction(5), 0.1]:
        assert parse_scalar(format_scalar(q), "exact" if isinstance(q, Fraction) else "float") == q


def test_rejects_zero_weight_and_names_it():
    with pytest.raises(InvalidWeight, match="weight 2"):
        WeightSpec.create([1, 0, 3], [1, 1, 1])


def test_rejects_empty_and_bad_dofs():
    with pytest.raises(EmptySpec):
        WeightSpec.create([], [])
    with pytest.raises(InvalidDof):
        WeightSpec.create([1], [0])
    with pytest.raises(InvalidDof):
        WeightSpec.create([1], ["-1/2"])
    with pytest.raises(ValueError):
        WeightSpec.create([1, 2], [1])


def test_repeated_weights_are_merged():
    spec = WeightSpec.create([2, 1, 2, 2], [1, 3, "1/2", 4])
    assert spec.weights == (2, 1)
    assert spec.dofs == (Fraction(11, 2), 3)
    assert spec.merged_from == ((1, 3, 4), (2,))
    assert spec.was_merged
    assert spec.to_dict()["merged_from"] == [[1, 3, 4], [2]]


def test_rational_dofs_allowed():
    spec = WeightSpec.create(["1/3"], ["5/2"])
    assert spec.mean == Fraction(5, 6)


def test_json_roundtrip():
    text = '{"weights": ["1", "-1/2"], "dofs": ["1", "3"], "mode": "exact"}'
    spec = WeightSpec.from_json(text)
    assert spec.weights == (1, Fraction(-1, 2))
    assert WeightSpec.from_dict(json.loads(json.dumps(spec.to_dict()))) == spec


def test_float_mode_and_conversion():
    spec = WeightSpec.from_json('{"weights": ["1", "-1/2"], "dofs": ["1", "3"], "mode": "float"}')
    assert spec.weights == (1.0, -0.5)
    assert all(isinstance(w, float) for w in spec.weights)
    assert spec.to_exact().weights == (1, Fraction(-1, 2))
    assert spec.to_exact().to_float() == spec


def test_specs_are_hashable():
    a = WeightSpec.create([1, 2], [1, 1])
    b = WeightSpec.create(["1", "2"], ["1", "1"])
    assert a == b and hash(a) == hash(b)
