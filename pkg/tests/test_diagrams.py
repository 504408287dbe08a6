"""Canonical forms, enumeration, smoothing counts, and Hopf operations."""

import pytest

import oracles
from chordweight import (
    ChordDiagram,
    connected_sum,
    coproduct,
    enumerate_diagrams,
    product,
    restrict,
    smooth_components,
)
from chordweight.diagrams import canonicalize, rotate_matching
from chordweight.formal import FormalSum


@pytest.mark.parametrize("code", ["", "AA", "ABAB", "AABB", "ABCABC", "AABBCC"])
def test_code_round_trip(code):
    assert ChordDiagram.from_code(code).code == code


def test_construction_canonicalizes_rotations():
    base = ChordDiagram.from_code("ABACBC")
    for r in range(6):
        rotated = canonicalize(rotate_matching(base.matching, r))
        assert rotated == base
        assert rotated.code == base.code


def test_reflection_is_not_identified():
    """The circle is oriented: a mirror image may be a different diagram.

    For every diagram with n <= 4 the reflected matching is still *some*
    canonical diagram, and for n <= 3 reflection happens to fix every class,
    so equality of the full enumeration is the sharper check.
    """
    for n in range(5):
        diagrams = set(enumerate_diagrams(n))
        reflected = set()
        for d in diagrams:
            m = len(d.matching)
            refl = tuple((m - 1 - d.matching[m - 1 - i]) % m for i in range(m))
            reflected.add(canonicalize(refl))
        assert reflected == diagrams


def test_from_code_rejects_bad_labels():
    with pytest.raises(ValueError):
        ChordDiagram.from_code("ABA")
    with pytest.raises(ValueError):
        ChordDiagram.from_code("AABBA")


def test_matching_validation():
    with pytest.raises(ValueError):
        ChordDiagram((0, 1))  # fixed point
    with pytest.raises(ValueError):
        ChordDiagram((1, 0, 2, 3))  # not an involution... 2 maps to itself
    with pytest.raises(ValueError):
        ChordDiagram((1, 0, 3))  # odd length


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 18), (5, 105)])
def test_enumeration_counts(n, count):
    assert len(enumerate_diagrams(n)) == count


def test_enumeration_matches_orbit_oracle():
    for n in range(5):
        orbits = oracles.rotation_orbits(n)
        diagrams = enumerate_diagrams(n)
        assert len(diagrams) == len(orbits)
        # each orbit canonicalizes to a single listed diagram
        for orbit in orbits:
            images = {canonicalize(mat) for mat in orbit}
            assert len(images) == 1
            assert images.pop() in diagrams


def test_enumeration_is_sorted_and_capped():
    codes = [d.code for d in enumerate_diagrams(3)]
    assert codes == sorted(codes)
    with pytest.raises(ValueError):
        enumerate_diagrams(9)
    with pytest.raises(ValueError):
        enumerate_diagrams(-1)


def test_chord_bookkeeping():
    d = ChordDiagram.from_code("ABAB")
    assert d.chords == ((0, 2), (1, 3))
    assert d.chord_of(0) == 0 and d.chord_of(3) == 1
    assert not d.has_isolated_chord
    assert ChordDiagram.from_code("AABB").has_isolated_chord
    assert ChordDiagram.from_code("AA").has_isolated_chord


def test_theta_smoothings():
    theta = ChordDiagram.from_code("AA")
    assert smooth_components(theta, (1,)) == 2
    assert smooth_components(theta, (-1,)) == 1


def test_two_chord_smoothings():
    crossing = ChordDiagram.from_code("ABAB")
    parallel = ChordDiagram.from_code("AABB")
    assert {s: smooth_components(crossing, s)
            for s in [(1, 1), (1, -1), (-1, 1), (-1, -1)]} == {
        (1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 2,
    }
    assert {s: smooth_components(parallel, s)
            for s in [(1, 1), (1, -1), (-1, 1), (-1, -1)]} == {
        (1, 1): 3, (1, -1): 2, (-1, 1): 2, (-1, -1): 1,
    }


def test_smoothing_matches_walking_oracle():
    for n in range(4):
        for d in enumerate_diagrams(n):
            for bits in range(1 << n):
                signs = tuple(1 if bits >> k & 1 else -1 for k in range(n))
                assert smooth_components(d, signs) == oracles.walk_components(
                    d.matching, signs
                )


def test_smoothing_of_bare_circle():
    assert smooth_components(ChordDiagram(), ()) == 1


def test_smoothing_sign_validation():
    theta = ChordDiagram.from_code("AA")
    with pytest.raises(ValueError):
        smooth_components(theta, (1, 1))
    with pytest.raises(ValueError):
        smooth_components(theta, (2,))


def test_product_degree_and_identity():
    theta = ChordDiagram.from_code("AA")
    crossing = ChordDiagram.from_code("ABAB")
    assert product(theta, crossing, 0, 0).n == 3
    empty = ChordDiagram()
    assert product(empty, crossing, 0, 0) == crossing
    assert product(crossing, empty, 3, 0) == crossing
    assert connected_sum(theta, theta) == ChordDiagram.from_code("AABB")


def test_product_cut_validation():
    theta = ChordDiagram.from_code("AA")
    with pytest.raises(ValueError):
        product(theta, theta, 3, 0)
    with pytest.raises(ValueError):
        product(theta, theta, 0, -1)


def test_restrict():
    d = ChordDiagram.from_code("ABCABC")
    assert restrict(d, [0]) == ChordDiagram.from_code("AA")
    assert restrict(d, [0, 1]) == ChordDiagram.from_code("ABAB")
    assert restrict(d, [0, 1, 2]) == d
    assert restrict(d, []) == ChordDiagram()
    with pytest.raises(ValueError):
        restrict(d, [3])


def test_coproduct_of_crossing():
    crossing = ChordDiagram.from_code("ABAB")
    theta = ChordDiagram.from_code("AA")
    empty = ChordDiagram()
    delta = coproduct(crossing)
    assert delta.coefficient((empty, crossing)) == 1
    assert delta.coefficient((crossing, empty)) == 1
    assert delta.coefficient((theta, theta)) == 2
    assert sum(c for _, c in delta.items()) == 4


def test_coproduct_total_mass():
    """Summing all coefficients counts the 2^n chord subsets."""
    for n in range(5):
        for d in enumerate_diagrams(n):
            assert sum(c for _, c in coproduct(d).items()) == 2 ** d.n
