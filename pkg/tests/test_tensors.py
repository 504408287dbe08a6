"""Weight tensor storage, contraction, and the tensor-level identities."""

from fractions import Fraction

import pytest

from chordweight import (
    ChordDiagram,
    WeightTensor,
    WorkLimitExceeded,
    check_four_term,
    enumerate_diagrams,
    evaluate,
    evaluate_naive,
    evaluate_sum,
    validate_symmetry,
)
from chordweight.formal import FormalSum

THETA = ChordDiagram.from_code("AA")


def test_constructor_validates_shape():
    with pytest.raises(ValueError):
        WeightTensor(0, [])
    with pytest.raises(ValueError):
        WeightTensor(2, [[[[0, 0]] * 2] * 2] * 1)


def test_tensor_is_immutable_and_hashable():
    t = WeightTensor.identity(2)
    with pytest.raises(AttributeError):
        t.dim = 3
    assert hash(t) == hash(WeightTensor.identity(2))
    assert t == WeightTensor.identity(2)
    assert t != WeightTensor.identity(3)


def test_identity_tensor_counts_one_colour():
    """Pass-through legs force one arc value around the whole circle."""
    for d in (1, 2, 3):
        t = WeightTensor.identity(d)
        for n in range(4):
            for diagram in enumerate_diagrams(n):
                assert evaluate(t, diagram) == d


def test_empty_diagram_evaluates_to_dimension():
    t = WeightTensor.from_entries(5, [])
    assert evaluate(t, ChordDiagram()) == 5
    assert evaluate_naive(t, ChordDiagram()) == 5


def test_theta_contraction_formula():
    """w(theta) = sum_{u,v} entry(u, v, v, u)."""
    entries = [[[[Fraction((a + 2 * b - c) * (d + 1), 3) for d in range(2)]
                 for c in range(2)] for b in range(2)] for a in range(2)]
    t = WeightTensor(2, entries)
    expected = sum(t.entry(u, v, v, u) for u in range(2) for v in range(2))
    assert evaluate(t, THETA) == expected
    assert evaluate_naive(t, THETA) == expected


def test_leg_symmetry_detection():
    sym = WeightTensor.from_entries(2, [(((0, 1, 1, 0)), 2), (((1, 0, 0, 1)), 2)])
    assert validate_symmetry(sym)
    asym = WeightTensor.from_entries(2, [(((0, 1, 1, 0)), 2)])
    assert not validate_symmetry(asym)


def test_identity_tensor_satisfies_four_term():
    assert check_four_term(WeightTensor.identity(3)) == (True, None)


def test_four_term_witness_is_lex_minimal():
    t = WeightTensor.from_entries(2, [((0, 0, 0, 1), 1)])
    ok, witness = check_four_term(t)
    assert not ok
    assert witness == (0, 1, 0, 1, 0, 0)


def test_one_dimensional_tensors_always_pass_four_term():
    t = WeightTensor.from_entries(1, [((0, 0, 0, 0), Fraction(7, 3))])
    assert check_four_term(t) == (True, None)
    assert evaluate(t, THETA) == Fraction(7, 3)


def test_evaluate_sum_is_linear():
    t = WeightTensor.identity(2)
    crossing = ChordDiagram.from_code("ABAB")
    combo = FormalSum({THETA: Fraction(1, 2), crossing: -3})
    assert evaluate_sum(t, combo) == Fraction(1, 2) * 2 + (-3) * 2
    assert evaluate_sum(t, FormalSum()) == 0


def test_naive_work_limit():
    t = WeightTensor.identity(3)
    d4 = enumerate_diagrams(4)[0]
    with pytest.raises(WorkLimitExceeded):
        evaluate_naive(t, d4, max_work=10)
    assert evaluate_naive(t, d4, max_work=3 ** 8) == 3


def test_work_limit_env_var(monkeypatch):
    monkeypatch.setenv("CHORDWEIGHT_MAX_WORK", "10")
    t = WeightTensor.identity(2)
    with pytest.raises(WorkLimitExceeded):
        evaluate_naive(t, enumerate_diagrams(2)[0])
    monkeypatch.setenv("CHORDWEIGHT_MAX_WORK", "100")
    assert evaluate_naive(t, enumerate_diagrams(2)[0]) == 2


def test_json_round_trip():
    t = WeightTensor.from_entries(
        2, [((0, 1, 1, 0), Fraction(2, 3)), ((1, 0, 0, 1), Fraction(2, 3))]
    )
    assert WeightTensor.from_json_dict(t.to_json_dict()) == t
    doc = t.to_json_dict()
    assert doc["dim"] == 2
    assert doc["entries"][0] == {"a": 0, "b": 1, "c": 1, "d": 0, "value": "2/3"}


def test_json_rejects_duplicates_and_bad_indices():
    from chordweight.jsonio import JSONFormatError

    base = {"dim": 2, "entries": [{"a": 0, "b": 0, "c": 0, "d": 0, "value": "1"}]}
    dup = {"dim": 2, "entries": base["entries"] * 2}
    with pytest.raises(JSONFormatError) as err:
        WeightTensor.from_json_dict(dup)
    assert err.value.path == "entries[1]"
    bad = {"dim": 2, "entries": [{"a": 2, "b": 0, "c": 0, "d": 0, "value": "1"}]}
    with pytest.raises(JSONFormatError) as err:
        WeightTensor.from_json_dict(bad)
    assert err.value.path == "entries[0].a"
