"""Chord diagrams on an oriented circle, up to rotation.

A diagram with n chords is stored as a fixed-point-free involution of the
endpoint positions 0..2n-1, read counterclockwise around the circle.
Instances are always kept in canonical form: among the 2n rotations of the
position labels, the one whose first-occurrence chord labelling reads
lexicographically smallest.  Rotations only; the circle is oriented, so a
reflected diagram is a different diagram.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .formal import FormalSum

ENUMERATION_CAP = 8


def _check_involution(matching: tuple) -> None:
    m = len(matching)
    if m % 2 != 0:
        raise ValueError("matching must have even length")
    for i, j in enumerate(matching):
        if not isinstance(j, int) or isinstance(j, bool) or not 0 <= j < m:
            raise ValueError(f"matching[{i}]={j!r} is not a position in 0..{m - 1}")
        if j == i:
            raise ValueError(f"endpoint {i} is paired with itself")
        if matching[j] != i:
            raise ValueError(f"matching is not an involution at position {i}")


def _label_sequence(matching: Sequence[int], start: int) -> tuple:
    """Chord labels in first-occurrence order, walking the circle from start."""
    m = len(matching)
    label_of = {}
    seq = []
    nxt = 0
    for k in range(m):
        pos = (start + k) % m
        partner = matching[pos]
        if partner in label_of:
            seq.append(label_of[partner])
        else:
            label_of[pos] = nxt
            seq.append(nxt)
            nxt += 1
    return tuple(seq)


def _matching_from_labels(seq: Sequence[int]) -> tuple:
    first: dict = {}
    matching = [0] * len(seq)
    for i, lab in enumerate(seq):
        if lab in first:
            j = first.pop(lab)
            matching[i] = j
            matching[j] = i
        else:
            first[lab] = i
    return tuple(matching)


@dataclass(frozen=True)
class ChordDiagram:
    """A canonical chord diagram; construction canonicalizes and validates."""

    matching: tuple = field(default=())

    def __post_init__(self):
        matching = tuple(self.matching)
        _check_involution(matching)
        if matching:
            best = min(_label_sequence(matching, s) for s in range(len(matching)))
            matching = _matching_from_labels(best)
        object.__setattr__(self, "matching", matching)

    @classmethod
    def from_code(cls, code: str) -> "ChordDiagram":
        """Parse a first-occurrence label code such as "ABAB"."""
        code = code.strip()
        positions: dict = {}
        for i, ch in enumerate(code):
            positions.setdefault(ch, []).append(i)
        for ch, occ in positions.items():
            if len(occ) != 2:
                raise ValueError(
                    f"label {ch!r} appears {len(occ)} times; each chord label "
                    "must appear exactly twice"
                )
        matching = [0] * len(code)
        for a, b in positions.values():
            matching[a] = b
            matching[b] = a
        return cls(tuple(matching))

    @property
    def n(self) -> int:
        return len(self.matching) // 2

    @property
    def code(self) -> str:
        """The canonical label code; empty string for the bare circle."""
        seq = _label_sequence(self.matching, 0)
        return "".join(string.ascii_uppercase[k] for k in seq)

    @property
    def chords(self) -> tuple:
        """Endpoint pairs (p, q) with p < q, ordered by first endpoint."""
        return tuple(
            (p, q) for p, q in enumerate(self.matching) if q > p
        )

    def chord_of(self, position: int) -> int:
        """Index of the chord (in first-occurrence order) at a position."""
        for k, (p, q) in enumerate(self.chords):
            if position in (p, q):
                return k
        raise ValueError(f"no endpoint at position {position}")

    @property
    def has_isolated_chord(self) -> bool:
        """True if some chord has cyclically adjacent endpoints."""
        m = len(self.matching)
        return any((p + 1) % m == q or (q + 1) % m == p for p, q in self.chords)

    def __lt__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return (self.n, self.code) < (other.n, other.code)

    def __repr__(self):
        return f"ChordDiagram({self.code!r})"


def canonicalize(raw_matching: Iterable[int]) -> ChordDiagram:
    """Canonical diagram of any fixed-point-free involution sequence."""
    return ChordDiagram(tuple(raw_matching))


def rotate_matching(matching: Sequence[int], r: int) -> tuple:
    """The matching with all positions shifted by r around the circle."""
    m = len(matching)
    if m == 0:
        return ()
    out = [0] * m
    for i in range(m):
        out[(i + r) % m] = (matching[i] + r) % m
    return tuple(out)


def enumerate_diagrams(n: int, cap: int = ENUMERATION_CAP) -> tuple:
    """All canonical diagrams with n chords, sorted by code."""
    if n < 0:
        raise ValueError("chord count must be non-negative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    found = set()

    def pair_up(partial: dict, free: list) -> None:
        if not free:
            matching = [0] * (2 * n)
            for p, q in partial.items():
                matching[p] = q
            found.add(ChordDiagram(tuple(matching)))
            return
        a = free[0]
        for k in range(1, len(free)):
            b = free[k]
            partial[a] = b
            partial[b] = a
            pair_up(partial, free[1:k] + free[k + 1:])
            del partial[a], partial[b]

    pair_up({}, list(range(2 * n)))
    return tuple(sorted(found))


@dataclass(frozen=True)
class SmoothingAssignment:
    """A sign (+1 pass-through, -1 cap-cup) for each chord of a diagram."""

    signs: tuple

    def __post_init__(self):
        signs = tuple(self.signs)
        for k, s in enumerate(signs):
            if s not in (1, -1):
                raise ValueError(f"sign for chord {k} must be +1 or -1, got {s!r}")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], n: int) -> "SmoothingAssignment":
        if set(mapping) != set(range(n)):
            raise ValueError(
                f"assignment domain {sorted(mapping)} must be exactly 0..{n - 1}"
            )
        return cls(tuple(mapping[k] for k in range(n)))

    @property
    def negatives(self) -> int:
        return sum(1 for s in self.signs if s == -1)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def smooth_components(diagram: ChordDiagram, signs) -> int:
    """Number of circles after replacing every chord by its smoothing.

    Each endpoint p splits into half-edges in(p) and out(p); circle arcs
    join out(k) to in(k+1 mod 2n).  A +1 chord (p,q) joins in(p)-out(q) and
    in(q)-out(p); a -1 chord joins in(p)-in(q) and out(p)-out(q).
    """
    if isinstance(signs, SmoothingAssignment):
        assignment = signs
    elif isinstance(signs, Mapping):
        assignment = SmoothingAssignment.from_mapping(signs, diagram.n)
    else:
        assignment = SmoothingAssignment(tuple(signs))
    if len(assignment.signs) != diagram.n:
        raise ValueError(
            f"got {len(assignment.signs)} signs for a {diagram.n}-chord diagram"
        )
    m = len(diagram.matching)
    if m == 0:
        return 1
    # half-edge ids: in(p) = 2p, out(p) = 2p+1
    uf = _UnionFind(2 * m)
    for p in range(m):
        uf.union(2 * p + 1, 2 * ((p + 1) % m))
    for k, (p, q) in enumerate(diagram.chords):
        if assignment.signs[k] == 1:
            uf.union(2 * p, 2 * q + 1)
            uf.union(2 * q, 2 * p + 1)
        else:
            uf.union(2 * p, 2 * q)
            uf.union(2 * p + 1, 2 * q + 1)
    return len({uf.find(x) for x in range(2 * m)})


def product(d1: ChordDiagram, d2: ChordDiagram, cut1: int, cut2: int) -> ChordDiagram:
    """Connected sum: splice d2's circle into d1 at the given cut arcs.

    Arc index j means the gap just before endpoint j; valid values are
    0..2n inclusive (2n wraps to 0).  The result depends on the cuts only
    up to the span of 4T relations.
    """
    m1, m2 = len(d1.matching), len(d2.matching)
    for cut, m, which in ((cut1, m1, "cut1"), (cut2, m2, "cut2")):
        if not isinstance(cut, int) or not 0 <= cut <= m:
            raise ValueError(f"{which}={cut!r} is not an arc index in 0..{m}")
    c1 = cut1 % m1 if m1 else 0
    c2 = cut2 % m2 if m2 else 0
    matching = [0] * (m1 + m2)
    for i in range(m1):
        partner = d1.matching[(c1 + i) % m1]
        matching[i] = (partner - c1) % m1
    for j in range(m2):
        partner = d2.matching[(c2 + j) % m2]
        matching[m1 + j] = m1 + (partner - c2) % m2
    return ChordDiagram(tuple(matching))


def connected_sum(d1: ChordDiagram, d2: ChordDiagram) -> ChordDiagram:
    """Convenience product at arc 0 of both factors."""
    return product(d1, d2, 0, 0)


def restrict(diagram: ChordDiagram, chord_ids: Iterable[int]) -> ChordDiagram:
    """Sub-diagram on a subset of chords, closing up the circle."""
    wanted = set(chord_ids)
    chords = diagram.chords
    for k in wanted:
        if not 0 <= k < len(chords):
            raise ValueError(f"no chord with index {k}")
    keep = sorted(p for k in wanted for p in chords[k])
    pos = {old: new for new, old in enumerate(keep)}
    matching = [0] * len(keep)
    for k in wanted:
        p, q = chords[k]
        matching[pos[p]] = pos[q]
        matching[pos[q]] = pos[p]
    return ChordDiagram(tuple(matching))


def coproduct(diagram: ChordDiagram) -> FormalSum:
    """Sum of (sub-diagram, complementary sub-diagram) over chord subsets."""
    n = diagram.n
    total = FormalSum()
    for mask in range(1 << n):
        left = [k for k in range(n) if mask >> k & 1]
        right = [k for k in range(n) if not mask >> k & 1]
        pair = (restrict(diagram, left), restrict(diagram, right))
        total = total + FormalSum.single(pair)
    return total
