"""Representation pairs, 2-cocycles and 2-coboundaries with values in a module.

A representation of ``g`` on ``h`` (dimension m) is a pair of maps
``l, r: g -> End(h)`` given on basis vectors. The extension bracket uses
``[x, a] = l_x a`` and ``[a, y] = r_y a``.

Bilinear maps ``g x g -> h`` are flattened to vectors of length ``n*n*m``
with ``omega(e_i, e_j)`` occupying ``[(i*n + j)*m : (i*n + j + 1)*m]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import AlgebraTable
from .linalg import (
    RowReducer,
    SubspaceBasis,
    Vector,
    as_matrix,
    frac,
    identity,
    matmul,
)


@dataclass(frozen=True)
class RepresentationPair:
    g: AlgebraTable
    h_dim: int
    l: tuple  # l[i] is the m x m matrix of l_{e_i}
    r: tuple

    def __post_init__(self):
        n, m = self.g.dim, self.h_dim
        for side in (self.l, self.r):
            if len(side) != n or any(len(mat) != m or any(len(row) != m for row in mat) for mat in side):
                raise ValueError("action matrices must be n matrices of shape m x m")

    @classmethod
    def zero(cls, g: AlgebraTable, m: int = 1) -> "RepresentationPair":
        z = tuple(tuple((Fraction(0),) * m for _ in range(m)) for _ in range(g.dim))
        return cls(g, m, z, z)

    @classmethod
    def scalar(cls, g: AlgebraTable, left: Mapping[str, object], right: Mapping[str, object]) -> "RepresentationPair":
        """One-dimensional module; basis vectors not mentioned act by zero."""
        l = [((Fraction(0),),)] * g.dim
        r = [((Fraction(0),),)] * g.dim
        for lab, v in left.items():
            l[g.index(lab)] = ((frac(v),),)
        for lab, v in right.items():
            r[g.index(lab)] = ((frac(v),),)
        return cls(g, 1, tuple(l), tuple(r))

    def l_of(self, x: Sequence) -> tuple:
        return _combine_mats(x, self.l, self.h_dim)

    def r_of(self, x: Sequence) -> tuple:
        return _combine_mats(x, self.r, self.h_dim)


def _combine_mats(x, mats, m):
    out = [[Fraction(0)] * m for _ in range(m)]
    for coef, mat in zip(x, mats):
        if coef:
            for a in range(m):
                for b in range(m):
                    if mat[a][b]:
                        out[a][b] += coef * mat[a][b]
    return tuple(tuple(row) for row in out)


def _sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _is_zero(mat) -> bool:
    return not any(x for row in mat for x in row)


def rep_check(p: RepresentationPair) -> tuple[bool, list]:
    """Check ``r_[x,y] = r_y r_x - r_x r_y``, ``l_[x,y] = r_y l_x - l_x r_y``
    and ``l_x l_y = -l_x r_y`` on basis pairs.

    Violations are ``(identity, i, j)`` with identity in {"r", "l", "ll"}.
    """
    g, bad = p.g, []
    for i in range(g.dim):
        for j in range(g.dim):
            xy = g.c[i][j]
            rx, ry, lx, ly = p.r[i], p.r[j], p.l[i], p.l[j]
            if not _is_zero(_sub(p.r_of(xy), _sub(matmul(ry, rx), matmul(rx, ry)))):
                bad.append(("r", i, j))
            if not _is_zero(_sub(p.l_of(xy), _sub(matmul(ry, lx), matmul(lx, ry)))):
                bad.append(("l", i, j))
            lxly = matmul(lx, ly)
            lxry = matmul(lx, ry)
            if any(a + b for ra, rb in zip(lxly, lxry) for a, b in zip(ra, rb)):
                bad.append(("ll", i, j))
    return not bad, bad


@dataclass(frozen=True)
class BilinearMap:
    g_dim: int
    h_dim: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.g_dim * self.g_dim * self.h_dim:
            raise ValueError("coords must have length n*n*m")

    @classmethod
    def zero(cls, n: int, m: int = 1) -> "BilinearMap":
        return cls(n, m, (Fraction(0),) * (n * n * m))

    @classmethod
    def from_values(cls, g: AlgebraTable, m: int, values: Mapping) -> "BilinearMap":
        """``values`` maps ``(left_label, right_label)`` to a scalar (m = 1) or an m-vector."""
        n = g.dim
        coords = [Fraction(0)] * (n * n * m)
        for (a, b), v in values.items():
            i, j = g.index(a), g.index(b)
            vec = (v,) if m == 1 and not isinstance(v, (tuple, list)) else v
            for t, x in enumerate(vec):
                coords[(i * n + j) * m + t] += frac(x)
        return cls(n, m, tuple(coords))

    def value(self, i: int, j: int) -> Vector:
        s = (i * self.g_dim + j) * self.h_dim
        return self.coords[s : s + self.h_dim]

    def __call__(self, x: Sequence, y: Sequence) -> Vector:
        out = [Fraction(0)] * self.h_dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    for t, v in enumerate(self.value(i, j)):
                        if v:
                            out[t] += a * b * v
        return tuple(out)

    def __add__(self, other: "BilinearMap") -> "BilinearMap":
        return BilinearMap(self.g_dim, self.h_dim, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def scaled(self, s) -> "BilinearMap":
        s = frac(s)
        return BilinearMap(self.g_dim, self.h_dim, tuple(s * x for x in self.coords))

    def nonzero(self, labels: Sequence[str] | None = None) -> dict:
        n = self.g_dim
        out = {}
        for i in range(n):
            for j in range(n):
                v = self.value(i, j)
                if any(v):
                    key = (labels[i], labels[j]) if labels else (i, j)
                    out[key] = v[0] if self.h_dim == 1 else v
        return out


@dataclass(frozen=True)
class LinearHom:
    """f: g -> h as an m x n matrix."""

    matrix: tuple

    @property
    def h_dim(self) -> int:
        return len(self.matrix)

    @property
    def g_dim(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def __call__(self, x: Sequence) -> Vector:
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self.matrix)


def _idx(n, m, i, j, t):
    return (i * n + j) * m + t


def cocycle_rows(p: RepresentationPair):
    """Rows of the linear system in omega-coordinates, triples in lexicographic order."""
    g, n, m = p.g, p.g.dim, p.h_dim
    c = g.c
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for a in range(m):
                    row: dict[int, Fraction] = {}

                    def put(col, v):
                        nv = row.get(col, 0) + v
                        if nv:
                            row[col] = nv
                        else:
                            row.pop(col, None)

                    for q in range(n):
                        if c[i][j][q]:
                            put(_idx(n, m, q, k, a), c[i][j][q])
                        if c[j][k][q]:
                            put(_idx(n, m, i, q, a), -c[j][k][q])
                        if c[i][k][q]:
                            put(_idx(n, m, q, j, a), -c[i][k][q])
                    for b in range(m):
                        if p.l[i][a][b]:
                            put(_idx(n, m, j, k, b), -p.l[i][a][b])
                        if p.r[j][a][b]:
                            put(_idx(n, m, i, k, b), -p.r[j][a][b])
                        if p.r[k][a][b]:
                            put(_idx(n, m, i, j, b), p.r[k][a][b])
                    yield (i, j, k, a), row


def cocycle_defect(p: RepresentationPair, w: BilinearMap, i: int, j: int, k: int) -> Vector:
    g, n = p.g, p.g.dim
    e = lambda q: tuple(Fraction(int(q == s)) for s in range(n))
    out = []
    t1 = w(g.c[i][j], e(k))
    t2 = w(e(i), g.c[j][k])
    t3 = w(g.c[i][k], e(j))
    lw = _apply(p.l[i], w.value(j, k))
    rw1 = _apply(p.r[j], w.value(i, k))
    rw2 = _apply(p.r[k], w.value(i, j))
    for a in range(p.h_dim):
        out.append(t1[a] - t2[a] - t3[a] - lw[a] - rw1[a] + rw2[a])
    return tuple(out)


def _apply(mat, v) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in mat)


def cocycle_check(p: RepresentationPair, w: BilinearMap) -> tuple[bool, list]:
    n = p.g.dim
    bad = [(i, j, k) for i in range(n) for j in range(n) for k in range(n) if any(cocycle_defect(p, w, i, j, k))]
    return not bad, bad


@dataclass(frozen=True)
class CocycleSpace:
    rep: RepresentationPair
    basis: SubspaceBasis
    kind: str  # "Z2" or "B2"

    @property
    def dim(self) -> int:
        return self.basis.dim

    def maps(self) -> list[BilinearMap]:
        n, m = self.rep.g.dim, self.rep.h_dim
        return [BilinearMap(n, m, v) for v in self.basis.vectors]

    def contains(self, w: BilinearMap) -> bool:
        return self.basis.contains(w.coords)


def compute_Z2(p: RepresentationPair) -> CocycleSpace:
    n, m = p.g.dim, p.h_dim
    red = RowReducer(n * n * m)
    for _, row in cocycle_rows(p):
        red.add(row)
    return CocycleSpace(p, SubspaceBasis.span(n * n * m, red.nullspace()), "Z2")


def coboundary(p: RepresentationPair, f: LinearHom, phi=None) -> BilinearMap:
    """``df(x,y) = f([x,y]) - l_{phi x} f(y) - r_{phi y} f(x)``; phi defaults to the identity."""
    g, n, m = p.g, p.g.dim, p.h_dim
    phi = phi if phi is not None else identity(n)
    cols = [tuple(phi[q][i] for q in range(n)) for i in range(n)]  # phi(e_i)
    fe = [f(tuple(Fraction(int(q == i)) for q in range(n))) for i in range(n)]
    coords = [Fraction(0)] * (n * n * m)
    for i in range(n):
        li = p.l_of(cols[i])
        for j in range(n):
            rj = p.r_of(cols[j])
            v1 = f(g.c[i][j])
            v2 = _apply(li, fe[j])
            v3 = _apply(rj, fe[i])
            for a in range(m):
                coords[_idx(n, m, i, j, a)] = v1[a] - v2[a] - v3[a]
    return BilinearMap(n, m, tuple(coords))


def compute_B2(p: RepresentationPair, phi=None) -> CocycleSpace:
    n, m = p.g.dim, p.h_dim
    gens = []
    for a in range(m):
        for q in range(n):
            mat = tuple(tuple(Fraction(int(r == a and s == q)) for s in range(n)) for r in range(m))
            gens.append(coboundary(p, LinearHom(mat), phi).coords)
    return CocycleSpace(p, SubspaceBasis.span(n * n * m, gens), "B2")


@dataclass(frozen=True)
class H2Result:
    dim: int
    representatives: tuple
    z2: CocycleSpace
    b2: CocycleSpace


def compute_H2(p: RepresentationPair, z2: CocycleSpace | None = None, b2: CocycleSpace | None = None) -> H2Result:
    z2 = z2 or compute_Z2(p)
    b2 = b2 or compute_B2(p)
    n, m = p.g.dim, p.h_dim
    # reduce Z2 basis modulo B2 and take the canonical echelon form of the residues
    residues = [b2.basis.reduce(v) for v in z2.basis.vectors]
    reps = SubspaceBasis.span(n * n * m, residues)
    if reps.dim != z2.dim - b2.dim:
        raise ArithmeticError("B2 is not contained in Z2")
    return H2Result(reps.dim, tuple(BilinearMap(n, m, v) for v in reps.vectors), z2, b2)


def reduce_mod_B2(b2: CocycleSpace, w: BilinearMap) -> BilinearMap:
    return BilinearMap(w.g_dim, w.h_dim, b2.basis.reduce(w.coords))


