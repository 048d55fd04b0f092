"""Finite-dimensional algebras given by rational structure constants.

``c[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``. Brackets are
not assumed antisymmetric; the identity checked is the right Leibniz identity
``[[x,y],z] = [x,[y,z]] + [[x,z],y]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import (
    RowReducer,
    SubspaceBasis,
    Vector,
    frac,
    random_vector,
    unit_vector,
)

DEFAULT_TRIALS = 16


@dataclass(frozen=True)
class AlgebraTable:
    dim: int
    basis_labels: tuple
    c: tuple  # c[i][j] is the coordinate tuple of [e_i, e_j]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ValueError("dimension must be positive")
        if len(self.basis_labels) != n or len(set(self.basis_labels)) != n:
            raise ValueError("basis labels must be n distinct strings")
        if len(self.c) != n or any(len(row) != n or any(len(v) != n for v in row) for row in self.c):
            raise ValueError("structure constants must have shape n x n x n")

    @classmethod
    def from_products(cls, labels: Sequence[str], products: Mapping, name: str = "") -> "AlgebraTable":
        """Build from ``{(left, right): {label: coeff}}``; omitted products are zero."""
        labels = tuple(labels)
        n = len(labels)
        index = {s: i for i, s in enumerate(labels)}
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (a, b), value in products.items():
            for lab, coef in value.items():
                c[index[a]][index[b]][index[lab]] += frac(coef)
        return cls(n, labels, tuple(tuple(tuple(v) for v in row) for row in c), name)

    @classmethod
    def abelian(cls, n: int, name: str = "") -> "AlgebraTable":
        labels = tuple(f"e{i + 1}" for i in range(n))
        return cls.from_products(labels, {}, name or f"abelian{n}")

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)

    def products(self) -> dict:
        """Nonzero products as ``{(left, right): {label: coeff}}``."""
        out = {}
        lab = self.basis_labels
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.c[i][j]
                if any(v):
                    out[(lab[i], lab[j])] = {lab[k]: x for k, x in enumerate(v) if x}
        return out

    def bracket(self, u: Sequence, v: Sequence) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, x in enumerate(self.c[i][j]):
                    if x:
                        out[k] += ab * x
        return tuple(out)

    def is_abelian(self) -> bool:
        return not any(x for row in self.c for v in row for x in v)

    def permuted(self, perm: Sequence[int]) -> "AlgebraTable":
        """Relabel so that new basis vector ``i`` is old basis vector ``perm[i]``."""
        n = self.dim
        inv = [0] * n
        for new, old in enumerate(perm):
            inv[old] = new
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    c[i][j][k] = self.c[perm[i]][perm[j]][perm[k]]
        labels = tuple(self.basis_labels[p] for p in perm)
        return AlgebraTable(n, labels, tuple(tuple(tuple(v) for v in row) for row in c), self.name)

    def relabeled(self, labels: Sequence[str]) -> "AlgebraTable":
        return AlgebraTable(self.dim, tuple(labels), self.c, self.name)


def leibniz_check(a: AlgebraTable) -> tuple[bool, list]:
    """Check ``[[ei,ej],ek] = [ei,[ej,ek]] + [[ei,ek],ej]`` on all basis triples."""
    n = a.dim
    e = [unit_vector(n, i) for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            eij = a.c[i][j]
            for k in range(n):
                lhs = a.bracket(eij, e[k])
                r1 = a.bracket(e[i], a.c[j][k])
                r2 = a.bracket(a.c[i][k], e[j])
                if any(l - x - y for l, x, y in zip(lhs, r1, r2)):
                    bad.append((i, j, k))
    return not bad, bad


def product_space(a: AlgebraTable, s: SubspaceBasis, t: SubspaceBasis) -> SubspaceBasis:
    """Span of ``[u, v]`` for u in s, v in t."""
    return SubspaceBasis.span(a.dim, (a.bracket(u, v) for u in s.vectors for v in t.vectors))


def lower_central_series(a: AlgebraTable) -> list[SubspaceBasis]:
    g = SubspaceBasis.full(a.dim)
    series = [g]
    for _ in range(a.dim + 1):
        nxt = product_space(a, series[-1], g)
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def derived_series(a: AlgebraTable) -> list[SubspaceBasis]:
    series = [SubspaceBasis.full(a.dim)]
    for _ in range(a.dim + 1):
        cur = series[-1]
        nxt = product_space(a, cur, cur)
        if nxt == cur:
            break
        series.append(nxt)
    return series


def _mult_rows(a: AlgebraTable, side: str):
    # rows of the linear system in x whose solutions are {x : [x, g] = 0} (left)
    # or {x : [g, x] = 0} (right)
    n = a.dim
    for j in range(n):
        for k in range(n):
            if side == "left":
                yield [a.c[i][j][k] for i in range(n)]
            else:
                yield [a.c[j][i][k] for i in range(n)]


def _kernel(a: AlgebraTable, rows) -> SubspaceBasis:
    red = RowReducer(a.dim)
    for r in rows:
        red.add(r)
    return SubspaceBasis.span(a.dim, red.nullspace())


def left_annihilator(a: AlgebraTable) -> SubspaceBasis:
    """{x : [x, g] = 0}."""
    return _kernel(a, _mult_rows(a, "left"))


def right_annihilator(a: AlgebraTable) -> SubspaceBasis:
    """{x : [g, x] = 0}."""
    return _kernel(a, _mult_rows(a, "right"))


def center(a: AlgebraTable) -> SubspaceBasis:
    rows = list(_mult_rows(a, "left")) + list(_mult_rows(a, "right"))
    return _kernel(a, rows)


def ideal_closure(a: AlgebraTable, s: SubspaceBasis) -> SubspaceBasis:
    g = SubspaceBasis.full(a.dim)
    cur = s
    while True:
        nxt = cur + product_space(a, cur, g) + product_space(a, g, cur)
        if nxt == cur:
            return cur
        cur = nxt


def is_ideal(a: AlgebraTable, s: SubspaceBasis) -> bool:
    return ideal_closure(a, s) == s


def is_subalgebra(a: AlgebraTable, s: SubspaceBasis) -> bool:
    return product_space(a, s, s) <= s


def is_nilpotent_subalgebra(a: AlgebraTable, s: SubspaceBasis) -> bool:
    """Lower central series of ``s`` taken inside ``s`` reaches zero."""
    cur = s
    for _ in range(s.dim + 1):
        if cur.dim == 0:
            return True
        nxt = product_space(a, cur, s)
        if nxt == cur:
            return False
        cur = nxt
    return cur.dim == 0


@dataclass(frozen=True)
class NilradicalVerdict:
    ok: bool
    reason: str = ""
    witness: tuple | None = None
    trials: int = 0
    seed: int | None = None
    note: str = "maximality is certified heuristically by random enlargement probes"


def verify_nilradical(
    a: AlgebraTable,
    claimed: SubspaceBasis,
    *,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> NilradicalVerdict:
    """Certify ``claimed`` as the nilradical.

    (i) ideal, (ii) nilpotent, (iii) enlarging by any complement direction, or
    by ``trials`` random rational vectors per direction, gives a non-nilpotent
    ideal closure. Step (iii) is sound but heuristic.
    """
    if not is_ideal(a, claimed):
        return NilradicalVerdict(False, "not_ideal", seed=seed)
    if not is_nilpotent_subalgebra(a, claimed):
        return NilradicalVerdict(False, "not_nilpotent", seed=seed)
    rng = random.Random(seed)
    count = 0
    for idx in claimed.complement_indices():
        probes = [unit_vector(a.dim, idx)]
        for _ in range(trials):
            v = list(random_vector(rng, a.dim))
            v[idx] = v[idx] or Fraction(1)
            probes.append(tuple(v))
        for v in probes:
            if claimed.contains(v):
                continue
            count += 1
            big = ideal_closure(a, claimed + SubspaceBasis.span(a.dim, [v]))
            if is_nilpotent_subalgebra(a, big):
                return NilradicalVerdict(False, "enlargeable", witness=tuple(v), trials=count, seed=seed)
    return NilradicalVerdict(True, trials=count, seed=seed)


def derivation_space(a: AlgebraTable) -> list[Vector]:
    """Basis of derivations as flattened n x n matrices (D[k][i] = coeff of e_k in D e_i)."""
    n = a.dim
    red = RowReducer(n * n)
    # D[ei,ej] - [D ei, ej] - [ei, D ej] = 0, component l
    for i in range(n):
        for j in range(n):
            for l in range(n):
                row = {}
                for k, x in enumerate(a.c[i][j]):
                    if x:
                        row[l * n + k] = row.get(l * n + k, 0) + x
                for k in range(n):
                    x = a.c[k][j][l]
                    if x:
                        row[k * n + i] = row.get(k * n + i, 0) - x
                    y = a.c[i][k][l]
                    if y:
                        row[k * n + j] = row.get(k * n + j, 0) - y
                red.add({c: v for c, v in row.items() if v})
    return red.nullspace()


def derivation_dim(a: AlgebraTable) -> int:
    return len(derivation_space(a))


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    lcs_dims: tuple
    derived_dims: tuple
    center_dim: int
    left_ann_dim: int
    right_ann_dim: int
    derivation_dim: int
    nilpotent: bool
    solvable: bool

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "lcs_dims": list(self.lcs_dims),
            "derived_dims": list(self.derived_dims),
            "center_dim": self.center_dim,
            "left_ann_dim": self.left_ann_dim,
            "right_ann_dim": self.right_ann_dim,
            "derivation_dim": self.derivation_dim,
            "nilpotent": self.nilpotent,
            "solvable": self.solvable,
        }


def fingerprint(a: AlgebraTable) -> Fingerprint:
    lcs = tuple(s.dim for s in lower_central_series(a))
    der = tuple(s.dim for s in derived_series(a))
    return Fingerprint(
        dim=a.dim,
        lcs_dims=lcs,
        derived_dims=der,
        center_dim=center(a).dim,
        left_ann_dim=left_annihilator(a).dim,
        right_ann_dim=right_annihilator(a).dim,
        derivation_dim=derivation_dim(a),
        nilpotent=lcs[-1] == 0,
        solvable=der[-1] == 0,
    )


def span_of_labels(a: AlgebraTable, labels: Iterable[str]) -> SubspaceBasis:
    return SubspaceBasis.coordinate(a.dim, [a.index(s) for s in labels])

