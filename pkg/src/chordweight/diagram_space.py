"""Relation vectors on the rational span of chord diagrams.

Generates the four-term (4T) and isolated-chord (1T) relation vectors in
each degree, computes quotient dimensions by exact sparse elimination, and
decides membership in the relation span.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import ChordDiagram, enumerate_diagrams
from .formal import FormalSum
from .linalg import sparse_rank

KINDS = ("framed", "unframed")


@dataclass(frozen=True)
class RelationSet:
    """Homogeneous relation vectors in a fixed degree."""

    n: int
    kind: str
    vectors: tuple

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def _reinsert(diagram: ChordDiagram, moving: int, seq: list, slot: int) -> ChordDiagram:
    order = seq[:slot] + [moving] + seq[slot:]
    pos = {token: i for i, token in enumerate(order)}
    matching = [0] * len(order)
    for p, q in diagram.chords:
        matching[pos[p]] = pos[q]
        matching[pos[q]] = pos[p]
    return ChordDiagram(tuple(matching))


def four_term_vector(diagram: ChordDiagram, moving_chord: int, fixed_chord: int,
                     endpoint: int) -> FormalSum:
    """One 4T relation vector.

    The chosen endpoint of the moving chord is removed from the circle and
    re-inserted immediately before / after each endpoint of the fixed chord;
    the four diagrams are signed +, -, +, - in that order.  Any weight
    system kills the result.
    """
    chords = diagram.chords
    for which, k in (("moving", moving_chord), ("fixed", fixed_chord)):
        if not 0 <= k < len(chords):
            raise ValueError(f"{which} chord index {k} out of range")
    if moving_chord == fixed_chord:
        raise ValueError("the moving and fixed chords must differ")
    if endpoint not in (0, 1):
        raise ValueError(f"endpoint must be 0 or 1, got {endpoint!r}")
    p = chords[moving_chord][endpoint]
    q1, q2 = chords[fixed_chord]
    seq = [x for x in range(2 * diagram.n) if x != p]
    total = FormalSum()
    for anchor in (q1, q2):
        at = seq.index(anchor)
        total = total + FormalSum.single(_reinsert(diagram, p, seq, at))
        total = total - FormalSum.single(_reinsert(diagram, p, seq, at + 1))
    return total


def four_term_relations(n: int) -> RelationSet:
    """All 4T vectors in degree n (over-generated; rank absorbs redundancy)."""
    vectors = []
    seen = set()
    if n >= 2:
        for diagram in enumerate_diagrams(n):
            for u in range(n):
                for v in range(n):
                    if u == v:
                        continue
                    for endpoint in (0, 1):
                        vec = four_term_vector(diagram, u, v, endpoint)
                        if not vec:
                            continue
                        key = tuple(vec.items())
                        if key not in seen:
                            seen.add(key)
                            vectors.append(vec)
    return RelationSet(n, "4T", tuple(vectors))


def one_term_relations(n: int) -> RelationSet:
    """Singleton vectors for every degree-n diagram with an isolated chord."""
    vectors = tuple(
        FormalSum.single(diagram)
        for diagram in enumerate_diagrams(n)
        if diagram.has_isolated_chord
    )
    return RelationSet(n, "1T", vectors)


def _relation_vectors(n: int, kind: str) -> list:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    vectors = list(four_term_relations(n).vectors)
    if kind == "unframed":
        vectors.extend(one_term_relations(n).vectors)
    return vectors


def _rows(vectors, index) -> list:
    rows = []
    for vec in vectors:
        row = {}
        for diagram, coeff in vec.items():
            row[index[diagram]] = coeff
        rows.append(row)
    return rows


def quotient_dimension(n: int, kind: str = "framed") -> int:
    """Dimension of degree-n diagrams modulo the chosen relations."""
    basis = enumerate_diagrams(n)
    index = {diagram: i for i, diagram in enumerate(basis)}
    rank = sparse_rank(_rows(_relation_vectors(n, kind), index))
    return len(basis) - rank


def in_relation_span(vector: FormalSum, kind: str = "framed") -> bool:
    """Exact membership of a homogeneous vector in the relation span."""
    if not vector:
        return True
    degrees = {diagram.n for diagram, _ in vector.items()}
    if len(degrees) != 1:
        raise ValueError(f"vector mixes degrees {sorted(degrees)}")
    n = degrees.pop()
    basis = enumerate_diagrams(n)
    index = {diagram: i for i, diagram in enumerate(basis)}
    relation_rows = _rows(_relation_vectors(n, kind), index)
    base_rank = sparse_rank(relation_rows)
    extended = relation_rows + _rows([vector], index)
    return sparse_rank(extended) == base_rank
