"""Metrized Lie algebras, representations, and induced weight tensors.

Everything is stored in a fixed basis: structure constants, the invariant
form, and representation matrices, all with exact rational entries.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .jsonio import (
    JSONFormatError,
    format_matrix,
    format_rational,
    parse_matrix,
    parse_rational,
)
from .linalg import commutator, determinant, is_symmetric, mat_inv, mat_mul, trace
from .tensors import WeightTensor


class MetrizedLieAlgebra:
    """Structure constants plus an invariant nondegenerate symmetric form.

    ``brackets[i][j][k]`` is the coefficient of e_k in [e_i, e_j], and
    ``form[i][j]`` is B(e_i, e_j).
    """

    def __init__(self, brackets, form):
        form = tuple(tuple(Fraction(x) for x in row) for row in form)
        dim = len(form)
        if any(len(row) != dim for row in form):
            raise ValueError("form must be a square matrix")
        brackets = tuple(
            tuple(tuple(Fraction(c) for c in row) for row in plane)
            for plane in brackets
        )
        if len(brackets) != dim or any(
            len(plane) != dim or any(len(row) != dim for row in plane)
            for plane in brackets
        ):
            raise ValueError(f"structure constants must be {dim}x{dim}x{dim}")
        self.dim = dim
        self.brackets = brackets
        self.form = form

    def bracket(self, x, y) -> list:
        """[x, y] for coordinate vectors x and y."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vectors must have the algebra's dimension")
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                row = self.brackets[i][j]
                for k in range(self.dim):
                    if row[k] != 0:
                        out[k] += Fraction(xi) * Fraction(yj) * row[k]
        return out

    def validate(self):
        """(True, None), or (False, message) naming the first broken axiom.

        Checks bracket antisymmetry, the Jacobi identity, and that the form
        is symmetric, nondegenerate, and invariant under the adjoint action.
        """
        m = self.dim
        f = self.brackets
        B = self.form
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    if f[i][j][k] != -f[j][i][k]:
                        return False, f"antisymmetry fails at (i,j,k)=({i},{j},{k})"
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    for l in range(m):
                        acc = Fraction(0)
                        for x in range(m):
                            acc += (f[i][j][x] * f[x][k][l]
                                    + f[j][k][x] * f[x][i][l]
                                    + f[k][i][x] * f[x][j][l])
                        if acc != 0:
                            return False, (
                                f"Jacobi identity fails at (i,j,k,l)=({i},{j},{k},{l})"
                            )
        if not is_symmetric(B):
            return False, "form is not symmetric"
        if m and determinant(B) == 0:
            return False, "form is degenerate"
        for z in range(m):
            for x in range(m):
                for y in range(m):
                    acc = Fraction(0)
                    for k in range(m):
                        acc += f[z][x][k] * B[k][y] + f[z][y][k] * B[x][k]
                    if acc != 0:
                        return False, (
                            f"form invariance fails at (z,x,y)=({z},{x},{y})"
                        )
        return True, None

    def casimir(self) -> tuple:
        """The inverse of the form, as a symmetric matrix C^{ij}."""
        return tuple(tuple(row) for row in mat_inv([list(r) for r in self.form]))

    def structure_tensor(self) -> tuple:
        """Y[i][j][k] = sum_{a,b} C[i][a] C[j][b] f[a][b][k]; totally antisymmetric."""
        m = self.dim
        C = self.casimir()
        Y = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
        for a in range(m):
            for b in range(m):
                row = self.brackets[a][b]
                for i in range(m):
                    cia = C[i][a]
                    if cia == 0:
                        continue
                    for j in range(m):
                        w = cia * C[j][b]
                        if w == 0:
                            continue
                        for k in range(m):
                            if row[k] != 0:
                                Y[i][j][k] += w * row[k]
        return tuple(tuple(tuple(r) for r in plane) for plane in Y)

    def __repr__(self):
        return f"MetrizedLieAlgebra(dim={self.dim})"


class Representation:
    """Matrices rho(e_i) acting on a dimV-dimensional module."""

    def __init__(self, algebra: MetrizedLieAlgebra, matrices, dimV=None):
        matrices = tuple(
            tuple(tuple(Fraction(x) for x in row) for row in mat) for mat in matrices
        )
        if len(matrices) != algebra.dim:
            raise ValueError("need one matrix per basis element")
        if matrices:
            inferred = len(matrices[0])
        elif dimV is None:
            raise ValueError("dimV is required when the algebra is zero-dimensional")
        else:
            inferred = dimV
        if dimV is not None and dimV != inferred:
            raise ValueError(f"dimV={dimV} does not match matrix size {inferred}")
        if any(len(mat) != inferred or any(len(row) != inferred for row in mat)
               for mat in matrices):
            raise ValueError(f"matrices must all be {inferred}x{inferred}")
        self.algebra = algebra
        self.matrices = matrices
        self.dimV = inferred

    def validate(self):
        """Check rho([e_i, e_j]) == rho_i rho_j - rho_j rho_i for all i < j."""
        m = self.algebra.dim
        f = self.algebra.brackets
        for i in range(m):
            for j in range(i + 1, m):
                lhs = [[Fraction(0)] * self.dimV for _ in range(self.dimV)]
                for k in range(m):
                    if f[i][j][k] != 0:
                        mat = self.matrices[k]
                        for r in range(self.dimV):
                            for c in range(self.dimV):
                                lhs[r][c] += f[i][j][k] * mat[r][c]
                rhs = commutator(
                    [list(r) for r in self.matrices[i]],
                    [list(r) for r in self.matrices[j]],
                )
                if any(lhs[r][c] != rhs[r][c]
                       for r in range(self.dimV) for c in range(self.dimV)):
                    return False, f"bracket compatibility fails at (i,j)=({i},{j})"
        return True, None

    def weight_tensor(self) -> WeightTensor:
        """rho(C): entry(a,b,c,d) = sum_{ij} C[i][j] rho_i[b][a] rho_j[d][c]."""
        d = self.dimV
        C = self.algebra.casimir()
        ent = [[[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
               for _ in range(d)]
        for i in range(self.algebra.dim):
            mi = self.matrices[i]
            for j in range(self.algebra.dim):
                cij = C[i][j]
                if cij == 0:
                    continue
                mj = self.matrices[j]
                for a in range(d):
                    for b in range(d):
                        u = cij * mi[b][a]
                        if u == 0:
                            continue
                        for c in range(d):
                            for dd in range(d):
                                v = mj[dd][c]
                                if v != 0:
                                    ent[a][b][c][dd] += u * v
        return WeightTensor(d, ent)

    def __repr__(self):
        return f"Representation(dim={self.algebra.dim}, dimV={self.dimV})"


def check_exchange_identity(rep: Representation):
    """Verify the two-sided exchange identity for rho(C).

    With T = rho(C) and Y the structure tensor, both of

        sum_x T(a,x,e,f) T(x,b,c,d) - T(a,x,c,d) T(x,b,e,f)
        sum_x T(a,b,c,x) T(x,d,e,f) - T(a,b,x,d) T(c,x,e,f)

    must equal sum_{ijk} Y[i][j][k] rho_i[b][a] rho_j[d][c] rho_k[f][e] for
    every index 6-tuple.  This is the algebraic reason rho(C) satisfies the
    tensor four-term identity.  Returns (True, None) or (False, witness).
    """
    T = rep.weight_tensor()
    Y = rep.algebra.structure_tensor()
    rho = rep.matrices
    d = rep.dimV
    m = rep.algebra.dim
    triples = [
        (i, j, k, Y[i][j][k])
        for i in range(m) for j in range(m) for k in range(m)
        if Y[i][j][k] != 0
    ]
    ent = T.entry
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for dd in range(d):
                    for e in range(d):
                        for f in range(d):
                            lhs = Fraction(0)
                            rhs = Fraction(0)
                            for x in range(d):
                                lhs += (ent(a, x, e, f) * ent(x, b, c, dd)
                                        - ent(a, x, c, dd) * ent(x, b, e, f))
                                rhs += (ent(a, b, c, x) * ent(x, dd, e, f)
                                        - ent(a, b, x, dd) * ent(c, x, e, f))
                            mid = Fraction(0)
                            for i, j, k, y in triples:
                                w = rho[i][b][a]
                                if w == 0:
                                    continue
                                w *= rho[j][dd][c]
                                if w == 0:
                                    continue
                                mid += y * w * rho[k][f][e]
                            if lhs != mid or mid != rhs:
                                return False, (a, b, c, dd, e, f)
    return True, None


def sl2_standard() -> Representation:
    """sl2 with basis (H, E, F), form B(x,y) = Tr(xy), standard 2-dim module."""
    brackets = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    # [H,E] = 2E, [H,F] = -2F, [E,F] = H
    brackets[0][1][1] = Fraction(2)
    brackets[1][0][1] = Fraction(-2)
    brackets[0][2][2] = Fraction(-2)
    brackets[2][0][2] = Fraction(2)
    brackets[1][2][0] = Fraction(1)
    brackets[2][1][0] = Fraction(-1)
    form = [[2, 0, 0], [0, 0, 1], [0, 1, 0]]
    algebra = MetrizedLieAlgebra(brackets, form)
    matrices = (
        ((1, 0), (0, -1)),
        ((0, 1), (0, 0)),
        ((0, 0), (1, 0)),
    )
    return Representation(algebra, matrices)


def so_standard(n: int) -> Representation:
    """so(n) on the antisymmetric basis A_ij = E_ij - E_ji (i < j, lex order).

    The form is B(x,y) = Tr(xy)/2, which is negative definite on this basis;
    structure constants and the form are computed from the matrices.
    """
    if n < 2:
        raise ValueError("so(n) requires n >= 2")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    basis = []
    for i, j in pairs:
        mat = [[Fraction(0)] * n for _ in range(n)]
        mat[i][j] = Fraction(1)
        mat[j][i] = Fraction(-1)
        basis.append(mat)
    brackets = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(m):
            comm = commutator(basis[a], basis[b])
            # an antisymmetric matrix is sum of its upper entries times A_ij
            for k, (i, j) in enumerate(pairs):
                brackets[a][b][k] = comm[i][j]
    form = [
        [trace(mat_mul(basis[a], basis[b])) / 2 for b in range(m)]
        for a in range(m)
    ]
    algebra = MetrizedLieAlgebra(brackets, form)
    return Representation(algebra, basis)


def abelian(m: int) -> Representation:
    """m-dimensional abelian algebra, B = I, zero action on an m-dim module."""
    if m < 0:
        raise ValueError("dimension must be non-negative")
    zero = [[Fraction(0)] * m for _ in range(m)]
    brackets = [[list(row) for row in zero] for _ in range(m)]
    form = [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]
    algebra = MetrizedLieAlgebra(brackets, form)
    return Representation(algebra, [zero] * m, dimV=m)


_BUILTIN_PATTERN = re.compile(r"^(sl2|so(\d+)|abelian(\d+))$")


def builtin(name: str) -> Representation:
    """Look up a named builtin: 'sl2', 'so<n>' (n >= 2), or 'abelian<m>'."""
    match = _BUILTIN_PATTERN.match(name)
    if match is None:
        raise ValueError(
            f"unknown builtin {name!r}; expected sl2, so<n>, or abelian<m>"
        )
    if match.group(2) is not None:
        return so_standard(int(match.group(2)))
    if match.group(3) is not None:
        return abelian(int(match.group(3)))
    return sl2_standard()


def algebra_to_json_dict(algebra: MetrizedLieAlgebra) -> dict:
    m = algebra.dim
    entries = []
    for i in range(m):
        for j in range(i + 1, m):
            coeffs = [
                [k, format_rational(algebra.brackets[i][j][k])]
                for k in range(m)
                if algebra.brackets[i][j][k] != 0
            ]
            if coeffs:
                entries.append({"i": i, "j": j, "coeffs": coeffs})
    return {
        "dim": m,
        "brackets": entries,
        "form": format_matrix(algebra.form),
    }


def _parse_index(value, path: str, bound: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < bound:
        raise JSONFormatError(path, f"expected an integer index in [0, {bound})")
    return value


def algebra_from_json_dict(data) -> MetrizedLieAlgebra:
    if not isinstance(data, dict):
        raise JSONFormatError("", "expected an object")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise JSONFormatError("dim", "expected a non-negative integer")
    raw = data.get("brackets")
    if not isinstance(raw, list):
        raise JSONFormatError("brackets", "expected a list")
    f = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen_pairs = set()
    for idx, item in enumerate(raw):
        path = f"brackets[{idx}]"
        if not isinstance(item, dict):
            raise JSONFormatError(path, "expected an object")
        i = _parse_index(item.get("i"), f"{path}.i", dim)
        j = _parse_index(item.get("j"), f"{path}.j", dim)
        if i == j:
            raise JSONFormatError(path, "bracket indices must differ")
        if (min(i, j), max(i, j)) in seen_pairs:
            raise JSONFormatError(path, f"duplicate bracket for pair ({i},{j})")
        seen_pairs.add((min(i, j), max(i, j)))
        coeffs = item.get("coeffs")
        if not isinstance(coeffs, list):
            raise JSONFormatError(f"{path}.coeffs", "expected a list")
        seen_k = set()
        for t, pair in enumerate(coeffs):
            cpath = f"{path}.coeffs[{t}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise JSONFormatError(cpath, "expected a [k, value] pair")
            k = _parse_index(pair[0], f"{cpath}[0]", dim)
            if k in seen_k:
                raise JSONFormatError(cpath, f"duplicate coefficient for k={k}")
            seen_k.add(k)
            value = parse_rational(pair[1], f"{cpath}[1]")
            f[i][j][k] = value
            f[j][i][k] = -value
    form = parse_matrix(data.get("form"), "form", rows=dim, cols=dim)
    return MetrizedLieAlgebra(f, form)


def representation_to_json_dict(rep: Representation) -> dict:
    out = algebra_to_json_dict(rep.algebra)
    out["dimV"] = rep.dimV
    out["matrices"] = [format_matrix(mat) for mat in rep.matrices]
    return out


def representation_from_json_dict(data) -> Representation:
    algebra = algebra_from_json_dict(data)
    dimV = data.get("dimV")
    if not isinstance(dimV, int) or isinstance(dimV, bool) or dimV < 0:
        raise JSONFormatError("dimV", "expected a non-negative integer")
    raw = data.get("matrices")
    if not isinstance(raw, list):
        raise JSONFormatError("matrices", "expected a list")
    if len(raw) != algebra.dim:
        raise JSONFormatError(
            "matrices", f"expected {algebra.dim} matrices, got {len(raw)}"
        )
    matrices = [
        parse_matrix(mat, f"matrices[{idx}]", rows=dimV, cols=dimV)
        for idx, mat in enumerate(raw)
    ]
    return Representation(algebra, matrices, dimV=dimV)
