"""One-shot acceptance checks with their own independent oracles.

Each check returns (ok, detail).  The oracles used here — dense
fraction-free elimination and brute-force rotation-orbit counting — are
deliberately separate implementations from the library code they audit.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .curvature import (
    CurvatureModel,
    check_parallel_four_term,
    constant_curvature,
    curvature_symmetries,
    holonomy_algebra,
    so_isomorphism,
    symmetric_triple,
    triple_from_rep,
    verify_lie_type,
)
from .diagram_space import (
    four_term_relations,
    in_relation_span,
    one_term_relations,
    quotient_dimension,
)
from .diagrams import ChordDiagram, coproduct, enumerate_diagrams, product
from .formal import FormalSum
from .lie import abelian, check_exchange_identity, sl2_standard, so_standard
from .linalg import form_signature
from .tensors import (
    WeightTensor,
    check_four_term,
    evaluate,
    evaluate_naive,
    evaluate_sum,
    validate_symmetry,
)
from .yamada import yamada_weight


def _dense_fraction_free_rank(rows, ncols: int) -> int:
    """Bareiss elimination on dense integer rows; oracle for sparse_rank."""
    mat = []
    for row in rows:
        denom = 1
        for v in row:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        ints = [int(v * denom) for v in row]
        if any(ints):
            mat.append(ints)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pivot = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            fi = mat[i][col]
            for j in range(ncols):
                num = pivot * mat[i][j] - fi * mat[rank][j]
                quot, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("non-exact fraction-free division")
                mat[i][j] = quot
        prev = pivot
        rank += 1
    return rank


def _brute_force_orbit_count(n: int) -> int:
    """Count rotation classes of perfect matchings without canonical codes."""
    m = 2 * n

    def matchings(points):
        if not points:
            yield {}
            return
        first = points[0]
        for i in range(1, len(points)):
            partner = points[i]
            rest = points[1:i] + points[i + 1:]
            for sub in matchings(rest):
                filled = dict(sub)
                filled[first] = partner
                filled[partner] = first
                yield filled

    everything = {
        tuple(mm[i] for i in range(m)) for mm in matchings(tuple(range(m)))
    }
    seen = set()
    orbits = 0
    for t in everything:
        if t in seen:
            continue
        orbits += 1
        for r in range(m):
            seen.add(tuple((t[(i - r) % m] + r) % m for i in range(m)))
    return orbits


def _indefinite_metric(d: int):
    return [[Fraction(-1 if i == j == 0 else (1 if i == j else 0))
             for j in range(d)] for i in range(d)]


def _bianchi_violating_model() -> CurvatureModel:
    """d=4 curvature that is antisymmetric and pair-symmetric but not Bianchi."""
    d = 4
    riemann = [[[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
               for _ in range(d)]
    for (a, b, c, x), v in {
        (0, 1, 2, 3): 1, (1, 0, 2, 3): -1,
        (2, 3, 0, 1): 1, (3, 2, 0, 1): -1,
        (2, 3, 1, 0): -1, (3, 2, 1, 0): 1,
        (0, 1, 3, 2): -1, (1, 0, 3, 2): 1,
    }.items():
        riemann[a][b][c][x] = Fraction(v)
    metric = [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]
    return CurvatureModel(metric, riemann)


def check_threeway_equality():
    """State sum, sphere curvature, and so3 Casimir agree on all n <= 4."""
    sphere = constant_curvature(3).weight_tensor()
    casimir = so_standard(3).weight_tensor()
    count = 0
    for n in range(5):
        for diagram in enumerate_diagrams(n):
            y = yamada_weight(diagram, 3)
            s = evaluate(sphere, diagram)
            w = evaluate(casimir, diagram)
            if not y == s == w:
                return False, (
                    f"mismatch on {diagram.code or 'empty'}: "
                    f"state sum {y}, curvature {s}, Casimir {w}"
                )
            count += 1
    for code, expected in (("AA", 6), ("ABAB", 6), ("AABB", 12)):
        got = yamada_weight(ChordDiagram.from_code(code))
        if got != expected:
            return False, f"spot value on {code}: expected {expected}, got {got}"
    return True, f"three values agree on all {count} diagrams; spot values 6, 6, 12"


def check_relation_soundness():
    """Every four-term vector with n <= 4 vanishes under six weight tensors."""
    tensors = (
        ("sl2", sl2_standard().weight_tensor()),
        ("so3", so_standard(3).weight_tensor()),
        ("so4", so_standard(4).weight_tensor()),
        ("sphere", constant_curvature(3).weight_tensor()),
        ("hyperbolic", constant_curvature(3, kappa=-1).weight_tensor()),
        ("indefinite", constant_curvature(3, _indefinite_metric(3)).weight_tensor()),
    )
    checked = 0
    for n in range(2, 5):
        for vector in four_term_relations(n):
            for name, tensor in tensors:
                value = evaluate_sum(tensor, vector)
                if value != 0:
                    return False, (
                        f"{name} tensor gives {value} on a degree-{n} "
                        f"four-term vector"
                    )
                checked += 1
    return True, f"{checked} (vector, tensor) evaluations all vanish exactly"


def check_tensor_identities():
    """Tensor-level four-term, parallel comparison, and exchange identity."""
    reps = (
        ("sl2", sl2_standard()),
        ("so2", so_standard(2)),
        ("so3", so_standard(3)),
        ("so4", so_standard(4)),
        ("abelian1", abelian(1)),
        ("abelian3", abelian(3)),
    )
    for name, rep in reps:
        tensor = rep.weight_tensor()
        if not validate_symmetry(tensor):
            return False, f"{name}: leg symmetry fails"
        ok, witness = check_four_term(tensor)
        if not ok:
            return False, f"{name}: tensor four-term fails at {witness}"
    models = (
        ("flat2", constant_curvature(2, kappa=0)),
        ("sphere2", constant_curvature(2)),
        ("sphere3", constant_curvature(3)),
        ("sphere4", constant_curvature(4)),
        ("hyperbolic3", constant_curvature(3, kappa=-1)),
        ("rescaled3", constant_curvature(3, kappa=2)),
        ("indefinite3", constant_curvature(3, _indefinite_metric(3))),
        ("lorentz4", constant_curvature(4, _indefinite_metric(4))),
    )
    for name, model in models:
        direct, _ = check_parallel_four_term(model)
        raised, _ = check_four_term(model.weight_tensor())
        if not direct:
            return False, f"{name}: parallel four-term identity fails"
        if direct is not raised:
            return False, f"{name}: parallel and tensor four-term checks disagree"
    bad = _bianchi_violating_model()
    direct, _ = check_parallel_four_term(bad)
    raised, _ = check_four_term(bad.weight_tensor())
    if direct is not raised:
        return False, "parallel and tensor checks disagree on the Bianchi-violating model"
    for name, rep in reps:
        ok, witness = check_exchange_identity(rep)
        if not ok:
            return False, f"{name}: exchange identity fails at {witness}"
    return True, (
        f"four-term and exchange identities hold for {len(reps)} builtins; "
        f"parallel and tensor checks agree on {len(models) + 1} models"
    )


def check_holonomy_pipeline():
    """Holonomy dimension, triple Jacobi, and Casimir recovery per model."""
    models = [
        ("sphere2", constant_curvature(2), True),
        ("sphere3", constant_curvature(3), True),
        ("sphere4", constant_curvature(4), True),
        ("hyperbolic3", constant_curvature(3, kappa=-1), True),
        ("rescaled3", constant_curvature(3, kappa=2), True),
        ("indefinite3", constant_curvature(3, _indefinite_metric(3)), False),
    ]
    for name, model, euclidean in models:
        d = model.dim
        hol = holonomy_algebra(model)
        if hol.dim_h != d * (d - 1) // 2:
            return False, f"{name}: holonomy dimension is {hol.dim_h}"
        if not hol.nondegenerate:
            return False, f"{name}: induced form is degenerate"
        triple = symmetric_triple(model)
        ok, why = triple.validate()
        if not ok:
            return False, f"{name}: triple validation fails: {why}"
        ok, why = verify_lie_type(model)
        if not ok:
            return False, f"{name}: Casimir recovery fails: {why}"
        if euclidean and so_isomorphism(hol) is None:
            return False, f"{name}: no isomorphism onto so({d}) found"
    hol3 = holonomy_algebra(constant_curvature(3))
    if form_signature(hol3.form) != (0, 3):
        return False, "unit three-sphere: induced form is not negative definite"
    triple3 = symmetric_triple(constant_curvature(3))
    if form_signature(triple3.form) != (3, 3):
        return False, "unit three-sphere: triple form signature is not (3, 3)"
    return True, (
        f"{len(models)} models: full holonomy dimension, valid triples, "
        f"exact Casimir recovery; sphere signatures (0,3) and (3,3)"
    )


def check_realizability():
    """sl2 with a symplectic form versus so3 with the identity form."""
    so3 = so_standard(3)
    eye = [[Fraction(1 if i == j else 0) for j in range(3)] for i in range(3)]
    verdict, witness = curvature_symmetries(so3, eye)
    if verdict != "pass":
        return False, f"so3 with identity form: {verdict} at {witness}"
    triple = triple_from_rep(so3, eye)
    reproduced = triple.holonomy.representation().weight_tensor()
    if reproduced != so3.weight_tensor():
        return False, "so3 round-trip does not reproduce the Casimir tensor"
    symplectic = [[0, 1], [-1, 0]]
    verdict, witness = curvature_symmetries(sl2_standard(), symplectic)
    if verdict != "fail(bianchi)":
        return False, (
            "sl2 with the symplectic form: expected the skew check to pass "
            f"and the Bianchi check to fail, got {verdict} at {witness}"
        )
    return True, (
        "so3 passes and round-trips exactly; sl2 with the symplectic form "
        "fails the Bianchi check"
    )


def check_dimension_tables():
    """Quotient dimensions against a dense fraction-free oracle."""
    framed_expected = (1, 1, 2, 3, 6)
    unframed_expected = (1, 0, 1, 1, 3)
    for n in range(5):
        basis = enumerate_diagrams(n)
        index = {diagram: i for i, diagram in enumerate(basis)}

        def dense(vectors):
            rows = []
            for vec in vectors:
                row = [Fraction(0)] * len(basis)
                for diagram, coeff in vec.items():
                    row[index[diagram]] = coeff
                rows.append(row)
            return rows

        four = list(four_term_relations(n))
        both = four + list(one_term_relations(n))
        oracle_framed = len(basis) - _dense_fraction_free_rank(dense(four), len(basis))
        oracle_unframed = len(basis) - _dense_fraction_free_rank(dense(both), len(basis))
        framed = quotient_dimension(n, "framed")
        unframed = quotient_dimension(n, "unframed")
        if not framed == oracle_framed == framed_expected[n]:
            return False, (
                f"framed dimension at n={n}: library {framed}, "
                f"oracle {oracle_framed}, expected {framed_expected[n]}"
            )
        if not unframed == oracle_unframed == unframed_expected[n]:
            return False, (
                f"unframed dimension at n={n}: library {unframed}, "
                f"oracle {oracle_unframed}, expected {unframed_expected[n]}"
            )
    return True, (
        "framed (1, 1, 2, 3, 6) and unframed (1, 0, 1, 1, 3); sparse and "
        "dense eliminations agree"
    )


def check_evaluator_agreement():
    """Sweep contraction equals the exhaustive sum, builtin and random."""
    tensors = [
        ("sl2", sl2_standard().weight_tensor()),
        ("so2", so_standard(2).weight_tensor()),
        ("so3", so_standard(3).weight_tensor()),
        ("abelian1", abelian(1).weight_tensor()),
        ("abelian2", abelian(2).weight_tensor()),
        ("abelian3", abelian(3).weight_tensor()),
    ]
    diagrams = [d for n in range(4) for d in enumerate_diagrams(n)]
    for name, tensor in tensors:
        for diagram in diagrams:
            if evaluate(tensor, diagram) != evaluate_naive(tensor, diagram):
                return False, f"{name} disagrees on {diagram.code or 'empty'}"
    rng = random.Random(20260815)
    for trial in range(100):
        ent = [[[[Fraction(0)] * 2 for _ in range(2)] for _ in range(2)]
               for _ in range(2)]
        legs = [(a, b) for a in range(2) for b in range(2)]
        for i, (a, b) in enumerate(legs):
            for c, dd in legs[i:]:
                value = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                ent[a][b][c][dd] = value
                ent[c][dd][a][b] = value
        tensor = WeightTensor(2, ent)
        for diagram in diagrams:
            if evaluate(tensor, diagram) != evaluate_naive(tensor, diagram):
                return False, (
                    f"random tensor {trial} disagrees on {diagram.code or 'empty'}"
                )
    return True, (
        f"{len(tensors)} builtin tensors and 100 seeded random symmetric "
        f"tensors agree on all {len(diagrams)} diagrams with n <= 3"
    )


def check_combinatorics():
    """Enumeration counts, coproduct axioms, and product cut independence."""
    expected = (1, 1, 2, 5, 18)
    for n in range(5):
        library = len(enumerate_diagrams(n))
        brute = _brute_force_orbit_count(n)
        if not library == brute == expected[n]:
            return False, (
                f"count at n={n}: library {library}, brute force {brute}, "
                f"expected {expected[n]}"
            )
    for n in range(5):
        for diagram in enumerate_diagrams(n):
            delta = coproduct(diagram)
            left = FormalSum()
            right = FormalSum()
            for (lo, hi), coeff in delta.items():
                if lo.n == 0:
                    left = left + FormalSum({hi: coeff})
                if hi.n == 0:
                    right = right + FormalSum({lo: coeff})
            if left != FormalSum.single(diagram) or right != FormalSum.single(diagram):
                return False, f"counit fails on {diagram.code or 'empty'}"
            first = FormalSum()
            second = FormalSum()
            for (lo, hi), coeff in delta.items():
                for (a, b), inner in coproduct(lo).items():
                    first = first + FormalSum({(a, b, hi): coeff * inner})
                for (b, c), inner in coproduct(hi).items():
                    second = second + FormalSum({(lo, b, c): coeff * inner})
            if first != second:
                return False, f"coassociativity fails on {diagram.code or 'empty'}"
    theta = ChordDiagram.from_code("AA")
    pairs = [
        (theta, ChordDiagram.from_code("ABAB")),
        (theta, ChordDiagram.from_code("AABB")),
        (ChordDiagram.from_code("ABAB"), theta),
        (ChordDiagram.from_code("AABB"), theta),
    ]
    checked = 0
    for d1, d2 in pairs:
        base = product(d1, d2, 0, 0)
        for cut1 in range(2 * d1.n + 1):
            for cut2 in range(2 * d2.n + 1):
                other = product(d1, d2, cut1, cut2)
                difference = FormalSum.single(other) - FormalSum.single(base)
                if not in_relation_span(difference, "framed"):
                    return False, (
                        f"product of {d1.code} and {d2.code} depends on the "
                        f"cut at ({cut1}, {cut2})"
                    )
                checked += 1
    return True, (
        f"counts (1, 1, 2, 5, 18) match brute force; coproduct axioms hold "
        f"for n <= 4; {checked} product cuts agree modulo four-term vectors"
    )


CRITERIA = (
    (1, "three-way weight-system equality", check_threeway_equality),
    (2, "four-term soundness of weight tensors", check_relation_soundness),
    (3, "tensor-level identities", check_tensor_identities),
    (4, "holonomy and symmetric triple", check_holonomy_pipeline),
    (5, "realizability of representations", check_realizability),
    (6, "quotient dimension tables", check_dimension_tables),
    (7, "evaluator agreement", check_evaluator_agreement),
    (8, "combinatorial sanity", check_combinatorics),
)


def run_all():
    """[(number, label, ok, detail)] for every acceptance check, in order."""
    results = []
    for number, label, func in CRITERIA:
        ok, detail = func()
        results.append((number, label, ok, detail))
    return results
