"""The combinatorial state-sum weight system."""

from fractions import Fraction

from chordweight import ChordDiagram, constant_curvature, enumerate_diagrams, evaluate
from chordweight.yamada import yamada_weight


def test_frozen_values_at_three():
    assert yamada_weight(ChordDiagram()) == 3
    assert yamada_weight(ChordDiagram.from_code("AA")) == 6
    assert yamada_weight(ChordDiagram.from_code("ABAB")) == 6
    assert yamada_weight(ChordDiagram.from_code("AABB")) == 12


def test_empty_diagram_is_the_loop_value():
    assert yamada_weight(ChordDiagram(), Fraction(7, 2)) == Fraction(7, 2)


def test_theta_in_terms_of_loop_value():
    """theta: the +1 smoothing has two circles, the -1 smoothing one."""
    for N in (2, 3, 5, Fraction(1, 3)):
        assert yamada_weight(ChordDiagram.from_code("AA"), N) == N * N - N


def test_matches_constant_curvature_models():
    """At integer N the state sum is the kappa=1, g=I weight system in dim N."""
    for N in (2, 4):
        tensor = constant_curvature(N).weight_tensor()
        for n in range(4):
            for diagram in enumerate_diagrams(n):
                assert yamada_weight(diagram, N) == evaluate(tensor, diagram)


def test_rational_loop_values_stay_exact():
    value = yamada_weight(ChordDiagram.from_code("ABAB"), Fraction(5, 3))
    # N^1*(1 - 2) + ... expand the four summands by hand: components are
    # 1, 1, 1, 2 with signs +, -, -, +
    N = Fraction(5, 3)
    assert value == N - N - N + N ** 2
