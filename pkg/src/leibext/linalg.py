"""Exact linear algebra over the rationals.

Everything here works on plain Python lists of :class:`fractions.Fraction`.
Systems coming from structure constants are very sparse, so elimination is
done incrementally on sparse rows (``dict`` column -> value) and the reduced
row echelon form is maintained as rows are inserted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


def frac(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use an exact rational")
    return Fraction(x)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


class RowReducer:
    """Incrementally maintained reduced row echelon form.

    Rows are sparse dicts. After every :meth:`add` the stored rows are in
    RREF: each has pivot coefficient 1 and no other stored row has a nonzero
    entry in its pivot column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, Fraction]] = {}

    def reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = {c: v for c, v in row.items() if v}
        for p in sorted(set(row) & set(self.rows)):
            coef = row.get(p)
            if not coef:
                continue
            for c, v in self.rows[p].items():
                nv = row.get(c, 0) - coef * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row) -> bool:
        """Insert a row (dense sequence or sparse dict). True if rank grew."""
        if not isinstance(row, dict):
            row = {i: frac(v) for i, v in enumerate(row) if v}
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for q, other in self.rows.items():
            coef = other.get(p)
            if coef:
                for c, v in row.items():
                    nv = other.get(c, 0) - coef * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self.rows[p] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def dense_rows(self) -> list[Vector]:
        out = []
        for p in self.pivots:
            r = self.rows[p]
            out.append(tuple(r.get(c, Fraction(0)) for c in range(self.ncols)))
        return out

    def nullspace(self) -> list[Vector]:
        """Basis of {v : row . v = 0 for every stored row}."""
        pivots = set(self.rows)
        basis = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, r in self.rows.items():
                coef = r.get(f)
                if coef:
                    v[p] = -coef
            basis.append(tuple(v))
        return basis


def rref(rows: Iterable[Sequence], ncols: int) -> list[Vector]:
    red = RowReducer(ncols)
    for r in rows:
        red.add(r)
    return red.dense_rows()


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    red = RowReducer(ncols)
    for r in rows:
        red.add(r)
    return red.rank


def nullspace(rows: Iterable[Sequence], ncols: int) -> list[Vector]:
    red = RowReducer(ncols)
    for r in rows:
        red.add(r)
    return red.nullspace()


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of Q^n stored as its canonical reduced row echelon basis.

    Two equal subspaces always have identical ``vectors``.
    """

    ambient_dim: int
    vectors: tuple

    @classmethod
    def span(cls, ambient_dim: int, generators: Iterable[Sequence]) -> "SubspaceBasis":
        return cls(ambient_dim, tuple(rref(generators, ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Iterable[int]) -> "SubspaceBasis":
        return cls.span(ambient_dim, [unit_vector(ambient_dim, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(v) if x) for v in self.vectors]

    def reducer(self) -> RowReducer:
        red = RowReducer(self.ambient_dim)
        for v in self.vectors:
            red.add(v)
        return red

    def reduce(self, v: Sequence) -> Vector:
        """Normal form of ``v`` modulo this subspace (zero iff v is inside)."""
        red = self.reducer()
        r = red.reduce({i: frac(x) for i, x in enumerate(v) if x})
        return tuple(r.get(i, Fraction(0)) for i in range(self.ambient_dim))

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def __le__(self, other: "SubspaceBasis") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def __add__(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return SubspaceBasis.span(self.ambient_dim, list(self.vectors) + list(other.vectors))

    def intersection(self, other: "SubspaceBasis") -> "SubspaceBasis":
        # a.u = b.w  <=>  (u, w) in null([A^T | -B^T])
        k, l = self.dim, other.dim
        if k == 0 or l == 0:
            return SubspaceBasis.zero(self.ambient_dim)
        rows = []
        for c in range(self.ambient_dim):
            rows.append([v[c] for v in self.vectors] + [-w[c] for w in other.vectors])
        gens = []
        for sol in nullspace(rows, k + l):
            gens.append(combine(sol[:k], self.vectors, self.ambient_dim))
        return SubspaceBasis.span(self.ambient_dim, gens)

    def complement_indices(self) -> list[int]:
        """Coordinate directions completing this basis (the non-pivot columns)."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]


def combine(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return tuple(out)


# -- small dense matrix helpers (matrices are tuples of row tuples) ---------

def identity(n: int):
    return tuple(unit_vector(n, i) for i in range(n))


def matmul(a, b):
    bt = list(zip(*b)) if b else []
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def matvec(a, v) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def transpose(a):
    return tuple(zip(*a))


def as_matrix(rows) -> tuple:
    return tuple(tuple(frac(x) for x in r) for r in rows)


def inverse(a):
    """Exact inverse via Gauss-Jordan; raises ValueError when singular."""
    n = len(a)
    aug = [list(r) + list(e) for r, e in zip(a, identity(n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(r[n:]) for r in aug)


def determinant(a) -> Fraction:
    m = [list(r) for r in a]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


# -- seeded random rationals -------------------------------------------------

def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    """Numerator and denominator uniform in [-9, 9], denominator nonzero."""
    while True:
        num = rng.randint(-9, 9)
        den = rng.choice([d for d in range(-9, 10) if d])
        q = Fraction(num, den)
        if q or not nonzero:
            return q


def random_vector(rng: random.Random, n: int) -> Vector:
    return tuple(random_rational(rng) for _ in range(n))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
