"""Combinatorial state-sum weight system from planar chord smoothings."""

from fractions import Fraction
from itertools import product as iter_product

from .diagrams import ChordDiagram, smooth_components


def yamada_weight(diagram: ChordDiagram, loop_value=3) -> Fraction:
    """Signed sum of loop_value**components over all 2^n smoothings.

    Each chord is resolved with either sign; a -1 resolution contributes a
    factor -1, and each smoothing contributes loop_value raised to its
    number of circle components.  With the default loop value 3 this equals
    the weight system of the unit-three-sphere curvature tensor.
    """
    value = Fraction(loop_value)
    total = Fraction(0)
    for signs in iter_product((1, -1), repeat=diagram.n):
        negatives = sum(1 for s in signs if s < 0)
        term = value ** smooth_components(diagram, signs)
        total += -term if negatives % 2 else term
    return total
