"""Rank-4 weight tensors and exact evaluation on chord diagrams.

A weight tensor H lives on a d-dimensional space; the stored component
entry(a, b, c, d) is leg 1 mapping arc index a to b and leg 2 mapping c
to d.  Placing the tensor on every chord of a diagram and contracting the
arc indices around the circle yields the tensor's weight system.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import product as iter_product

from .diagrams import ChordDiagram
from .formal import FormalSum
from .jsonio import JSONFormatError, format_rational, parse_rational

DEFAULT_MAX_WORK = 10 ** 7
WORK_ENV_VAR = "CHORDWEIGHT_MAX_WORK"


class WorkLimitExceeded(RuntimeError):
    """The naive full-sum evaluation would exceed the work bound."""


class WeightTensor:
    """Immutable dense rank-4 rational tensor with two (in, out) legs."""

    __slots__ = ("dim", "entries", "_eval_cache")

    def __init__(self, dim: int, entries):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        converted = tuple(
            tuple(tuple(tuple(Fraction(x) for x in row) for row in plane)
                  for plane in cube)
            for cube in entries
        )
        shape_ok = len(converted) == dim and all(
            len(cube) == dim and all(
                len(plane) == dim and all(len(row) == dim for row in plane)
                for plane in cube
            )
            for cube in converted
        )
        if not shape_ok:
            raise ValueError(f"entries must form a {dim}^4 array")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", converted)
        object.__setattr__(self, "_eval_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("WeightTensor is immutable")

    def entry(self, a: int, b: int, c: int, d: int) -> Fraction:
        """Component with leg 1 = (in a, out b), leg 2 = (in c, out d)."""
        return self.entries[a][b][c][d]

    @classmethod
    def from_entries(cls, dim: int, nonzero) -> "WeightTensor":
        """Build from an iterable of ((a,b,c,d), value) pairs; rest zero."""
        arr = [[[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
               for _ in range(dim)]
        for (a, b, c, d), v in nonzero:
            arr[a][b][c][d] = Fraction(v)
        return cls(dim, arr)

    @classmethod
    def identity(cls, dim: int) -> "WeightTensor":
        """The pass-through tensor: both legs act as the identity."""
        return cls.from_entries(
            dim,
            (((a, a, c, c), 1) for a in range(dim) for c in range(dim)),
        )

    def nonzero_items(self):
        for a in range(self.dim):
            for b in range(self.dim):
                for c in range(self.dim):
                    for d in range(self.dim):
                        v = self.entries[a][b][c][d]
                        if v:
                            yield (a, b, c, d), v

    def __eq__(self, other):
        if not isinstance(other, WeightTensor):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self):
        return hash((self.dim, self.entries))

    def __repr__(self):
        nnz = sum(1 for _ in self.nonzero_items())
        return f"WeightTensor(dim={self.dim}, nonzero={nnz})"

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [
                {"a": a, "b": b, "c": c, "d": d, "value": format_rational(v)}
                for (a, b, c, d), v in sorted(self.nonzero_items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data) -> "WeightTensor":
        if not isinstance(data, dict):
            raise JSONFormatError("", "expected a JSON object")
        dim = data.get("dim")
        if not isinstance(dim, int) or dim < 1:
            raise JSONFormatError("dim", "must be a positive integer")
        raw = data.get("entries", [])
        if not isinstance(raw, list):
            raise JSONFormatError("entries", "must be a list")
        seen = {}
        for i, item in enumerate(raw):
            path = f"entries[{i}]"
            if not isinstance(item, dict):
                raise JSONFormatError(path, "expected an object")
            idx = []
            for key in ("a", "b", "c", "d"):
                v = item.get(key)
                if not isinstance(v, int) or not 0 <= v < dim:
                    raise JSONFormatError(
                        f"{path}.{key}", f"must be an integer in 0..{dim - 1}"
                    )
                idx.append(v)
            idx = tuple(idx)
            if idx in seen:
                raise JSONFormatError(path, f"duplicate entry for indices {idx}")
            seen[idx] = parse_rational(item.get("value"), f"{path}.value")
        return cls.from_entries(dim, seen.items())


def validate_symmetry(tensor: WeightTensor) -> bool:
    """True iff swapping the two legs leaves every component fixed."""
    d = tensor.dim
    ent = tensor.entries
    return all(
        ent[a][b][c][e] == ent[c][e][a][b]
        for a in range(d) for b in range(d) for c in range(d) for e in range(d)
    )


def check_four_term(tensor: WeightTensor):
    """Check the four-term identity on two chords sharing an arc.

    Returns (True, None) or (False, witness) where the witness is the first
    free-index tuple (a, b, c, d, e, f) at which the alternating sum of the
    four two-chord contractions fails to vanish.
    """
    d = tensor.dim
    ent = tensor.entries
    rng = range(d)
    for a, b, c, dd, e, f in iter_product(rng, repeat=6):
        total = Fraction(0)
        for x in rng:
            total += ent[e][f][a][x] * ent[x][b][c][dd]
            total -= ent[e][f][x][b] * ent[a][x][c][dd]
            total += ent[e][f][c][x] * ent[a][b][x][dd]
            total -= ent[e][f][x][dd] * ent[a][b][c][x]
        if total != 0:
            return False, (a, b, c, dd, e, f)
    return True, None


def evaluate(tensor: WeightTensor, diagram: ChordDiagram) -> Fraction:
    """Contract the tensor around the circle; exact value of the weight system.

    Sweep contraction: endpoints are processed in circular order while the
    state maps (current arc index, one (in, out) pair per open chord) to a
    partial value.  Cost O(2n * d^(2k+2)) with k the maximal number of
    simultaneously open chords.
    """
    cached = tensor._eval_cache.get(diagram)
    if cached is not None:
        return cached
    d = tensor.dim
    m = len(diagram.matching)
    if m == 0:
        result = Fraction(d)
        tensor._eval_cache[diagram] = result
        return result
    ent = tensor.entries
    total = Fraction(0)
    for start_arc in range(d):
        states = {(start_arc, ()): Fraction(1)}
        open_chords: list = []
        for p in range(m):
            q = diagram.matching[p]
            new_states: dict = {}
            if q > p:
                open_chords.append(p)
                for (cur, pairs), val in states.items():
                    for x in range(d):
                        key = (x, pairs + ((cur, x),))
                        if key in new_states:
                            new_states[key] += val
                        else:
                            new_states[key] = val
            else:
                idx = open_chords.index(q)
                open_chords.pop(idx)
                for (cur, pairs), val in states.items():
                    a, b = pairs[idx]
                    rest = pairs[:idx] + pairs[idx + 1:]
                    row = ent[a][b][cur]
                    for x in range(d):
                        h = row[x]
                        if h:
                            key = (x, rest)
                            inc = val * h
                            if key in new_states:
                                new_states[key] += inc
                            else:
                                new_states[key] = inc
            states = new_states
        total += states.get((start_arc, ()), Fraction(0))
    tensor._eval_cache[diagram] = total
    return total


def _work_limit(max_work) -> int:
    if max_work is not None:
        return int(max_work)
    env = os.environ.get(WORK_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{WORK_ENV_VAR} must be an integer, got {env!r}") from exc
    return DEFAULT_MAX_WORK


def evaluate_naive(tensor: WeightTensor, diagram: ChordDiagram, max_work=None) -> Fraction:
    """Full-sum oracle: iterate over all arc-index assignments.

    Arc j is the arc entering endpoint j, so endpoint p reads (arcs[p],
    arcs[p+1 mod 2n]) as its (in, out) pair.  Cost d^(2n), guarded by
    max_work (falling back to the CHORDWEIGHT_MAX_WORK environment
    variable, then a builtin default).
    """
    d = tensor.dim
    n = diagram.n
    limit = _work_limit(max_work)
    work = d ** (2 * n)
    if work > limit:
        raise WorkLimitExceeded(
            f"naive evaluation needs d^(2n) = {work} assignments, limit is {limit}"
        )
    if n == 0:
        return Fraction(d)
    m = 2 * n
    ent = tensor.entries
    chords = diagram.chords
    total = Fraction(0)
    for arcs in iter_product(range(d), repeat=m):
        term = Fraction(1)
        for p, q in chords:
            term *= ent[arcs[p]][arcs[(p + 1) % m]][arcs[q]][arcs[(q + 1) % m]]
            if term == 0:
                break
        total += term
    return total


def evaluate_sum(tensor: WeightTensor, combination: FormalSum) -> Fraction:
    """Linear extension of evaluate to formal sums of diagrams."""
    total = Fraction(0)
    for diagram, coeff in combination.items():
        total += coeff * evaluate(tensor, diagram)
    return total
