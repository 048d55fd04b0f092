"""The action of Aut(g) x Aut(h) on cocycle data, orbit search, and invariants.

An automorphism is stored as a matrix whose column ``i`` is the image of
``e_i``. The action is

    omega'(x, y) = psi(omega(phi x, phi y)),  l'_x = psi l_{phi x} psi^-1,
    r'_x = psi r_{phi x} psi^-1.

Note the order: acting by (phi2, psi2) then (phi1, psi1) equals acting once by
(phi2 o phi1, psi1 psi2). In phi this is a right action.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .algebra import AlgebraTable, fingerprint
from .cohomology import BilinearMap, RepresentationPair, compute_B2
from .extension import ExtensionSpec, build_extension
from .linalg import (
    RowReducer,
    SubspaceBasis,
    as_matrix,
    determinant,
    frac,
    identity,
    inverse,
    matmul,
    matvec,
)

DEFAULT_GRID = tuple(Fraction(x) for x in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3, Fraction(1, 3), Fraction(-1, 3)))


def _column(mat, i):
    return tuple(row[i] for row in mat)


def verify_automorphism(a: AlgebraTable, matrix) -> tuple[bool, list]:
    """Invertible and ``phi[e_i, e_j] = [phi e_i, phi e_j]`` for all basis pairs."""
    m = as_matrix(matrix)
    n = a.dim
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError("matrix shape does not match the algebra")
    bad = []
    if determinant(m) == 0:
        bad.append(("singular",))
    cols = [_column(m, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if matvec(m, a.c[i][j]) != a.bracket(cols[i], cols[j]):
                bad.append((i, j))
    return not bad, bad


@dataclass(frozen=True)
class Automorphism:
    algebra: AlgebraTable
    matrix: tuple

    @classmethod
    def from_images(cls, a: AlgebraTable, images: Mapping[str, Mapping[str, object]]) -> "Automorphism":
        n = a.dim
        cols = []
        for lab in a.basis_labels:
            v = [Fraction(0)] * n
            for k, x in images.get(lab, {lab: 1}).items():
                v[a.index(k)] += frac(x)
            cols.append(v)
        return cls(a, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    @classmethod
    def identity(cls, a: AlgebraTable) -> "Automorphism":
        return cls(a, identity(a.dim))

    def __call__(self, v: Sequence) -> tuple:
        return matvec(self.matrix, v)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self o other`` (apply ``other`` first)."""
        return Automorphism(self.algebra, matmul(self.matrix, other.matrix))

    def inverse(self) -> "Automorphism":
        return Automorphism(self.algebra, inverse(self.matrix))

    def verify(self) -> bool:
        return verify_automorphism(self.algebra, self.matrix)[0]


@dataclass(frozen=True)
class OrbitElement:
    omega: BilinearMap
    rep: RepresentationPair


def _scalar_psi(psi, m: int):
    if isinstance(psi, (int, Fraction, str)):
        lam = frac(psi)
        return tuple(tuple(lam if r == c else Fraction(0) for c in range(m)) for r in range(m))
    return as_matrix(psi)


def act(phi: Automorphism, psi, el: OrbitElement) -> OrbitElement:
    """Transform ``el`` by ``(phi, psi)``; ``psi`` may be a scalar when dim h = 1."""
    p, w = el.rep, el.omega
    n, m = p.g.dim, p.h_dim
    psi = _scalar_psi(psi, m)
    psi_inv = inverse(psi)
    cols = [_column(phi.matrix, i) for i in range(n)]
    coords = []
    for i in range(n):
        for j in range(n):
            coords.extend(matvec(psi, w(cols[i], cols[j])))
    l2 = tuple(matmul(matmul(psi, p.l_of(cols[i])), psi_inv) for i in range(n))
    r2 = tuple(matmul(matmul(psi, p.r_of(cols[i])), psi_inv) for i in range(n))
    return OrbitElement(BilinearMap(n, m, tuple(coords)), RepresentationPair(p.g, m, l2, r2))


# -- parameterized automorphism families -------------------------------------

@dataclass(frozen=True)
class AutFamily:
    """``build(params) -> images`` for a family of automorphisms.

    Parameters listed in ``nonzero`` default to 1, the others to 0.
    ``search`` names the parameters varied by the grid search.
    """

    name: str
    algebra: AlgebraTable
    params: tuple
    nonzero: tuple
    build: Callable[[dict], dict] = field(compare=False)
    search: tuple = ()

    def values(self, given: Mapping[str, object] | None = None) -> dict:
        vals = {p: Fraction(1) if p in self.nonzero else Fraction(0) for p in self.params}
        for k, v in (given or {}).items():
            if k not in vals:
                raise KeyError(f"{self.name} has no parameter {k!r}")
            vals[k] = frac(v)
        for p in self.nonzero:
            if vals[p] == 0:
                raise ValueError(f"parameter {p} must be nonzero")
        return vals

    def __call__(self, **given) -> Automorphism:
        return Automorphism.from_images(self.algebra, self.build(self.values(given)))


@dataclass(frozen=True)
class Target:
    """Cocycle class ``base + sum d_k directions[k]`` with a fixed representation."""

    name: str
    rep: RepresentationPair
    base: BilinearMap
    directions: tuple = ()


@dataclass(frozen=True)
class Witness:
    family: str
    params: tuple  # sorted (name, value) pairs
    lam: Fraction
    source: str  # "explicit" or "grid"

    def as_dict(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class OrbitMatch:
    status: str  # "match" or "no_match"
    target_index: int | None = None
    target: str | None = None
    witness: Witness | None = None
    coords: tuple = ()
    tried: int = 0

    @property
    def matched(self) -> bool:
        return self.status == "match"


def _same_rep(p: RepresentationPair, q: RepresentationPair) -> bool:
    return p.l == q.l and p.r == q.r


def match_target(el: OrbitElement, target: Target, b2: SubspaceBasis | None = None):
    """Coordinates ``d`` with ``el.omega - base - sum d_k dir_k`` in B^2, or None."""
    if not _same_rep(el.rep, target.rep):
        return None
    if b2 is None:
        b2 = compute_B2(target.rep).basis
    diff = tuple(x - y for x, y in zip(el.omega.coords, target.base.coords))
    k = len(target.directions)
    # solve diff = sum d_k dir_k + (element of B2) by reducing everything mod B2
    rd = b2.reduce(diff)
    dirs = [b2.reduce(d.coords) for d in target.directions]
    if not k:
        return () if not any(rd) else None
    red = RowReducer(k + 1)
    for col in range(len(rd)):
        red.add([d[col] for d in dirs] + [rd[col]])
    if k in red.rows:  # the right-hand side is a pivot: inconsistent
        return None
    sol = [Fraction(0)] * k
    for p, row in red.rows.items():
        sol[p] = row.get(k, Fraction(0))
    # check: a zero column with nonzero residue is caught by the pivot test
    return tuple(sol)


def normalize_in_orbit(
    el: OrbitElement,
    families: Sequence[AutFamily],
    targets: Sequence[Target],
    *,
    explicit: Sequence[tuple] = (),
    grid: Sequence[Fraction] = DEFAULT_GRID,
) -> OrbitMatch:
    """Search for (phi, psi) carrying ``el`` onto one of ``targets`` modulo B^2.

    ``explicit`` holds ``(family_name, params, lam)`` candidates tried first.
    A ``no_match`` result is inconclusive.
    """
    if compute_B2(el.rep).contains(el.omega):
        raise ValueError("element is zero in H^2")
    fams = {f.name: f for f in families}
    b2_cache: dict = {}
    tried = 0

    def attempt(fam: AutFamily, params: dict, lam, source):
        nonlocal tried
        tried += 1
        try:
            phi = fam(**params)
        except (ValueError, ZeroDivisionError):
            return None
        moved = act(phi, lam, el)
        for idx, t in enumerate(targets):
            key = (t.rep.l, t.rep.r)
            if key not in b2_cache:
                b2_cache[key] = compute_B2(t.rep).basis
            d = match_target(moved, t, b2_cache[key])
            if d is not None:
                w = Witness(fam.name, tuple(sorted(fam.values(params).items())), frac(lam), source)
                return OrbitMatch("match", idx, t.name, w, d, tried)
        return None

    for name, params, lam in explicit:
        try:
            lam = frac(lam)
        except ZeroDivisionError:
            continue
        if lam == 0:
            continue
        hit = attempt(fams[name], dict(params), lam, "explicit")
        if hit:
            return hit
    for fam in families:
        for combo in itertools.product(grid, repeat=len(fam.search) + 1):
            *vals, lam = combo
            hit = attempt(fam, dict(zip(fam.search, vals)), lam, "grid")
            if hit:
                return hit
    return OrbitMatch("no_match", tried=tried)


# -- explicit isomorphisms between extensions ----------------------------------

def extension_isomorphism(src: ExtensionSpec, phi: Automorphism, psi, dst: ExtensionSpec):
    """Find ``Theta = [[phi^-1, 0], [F, psi]]`` with Theta an isomorphism
    ``build_extension(src) -> build_extension(dst)``.

    ``dst`` is expected to be cohomologous to ``act(phi, psi, src)``; ``F``
    absorbs the coboundary. Returns the matrix or None. Only abelian h.
    """
    if not dst.h.is_abelian() or not src.h.is_abelian():
        raise ValueError("only abelian h is supported")
    n, m = src.g.dim, src.h.dim
    d = n + m
    psi = _scalar_psi(psi, m)
    phi_inv = inverse(phi.matrix)
    a, b = build_extension(src), build_extension(dst)

    def theta(f_flat):
        t = [[Fraction(0)] * d for _ in range(d)]
        for r in range(n):
            for c in range(n):
                t[r][c] = phi_inv[r][c]
        for r in range(m):
            for c in range(n):
                t[n + r][c] = f_flat[r * n + c]
            for c in range(m):
                t[n + r][n + c] = psi[r][c]
        return tuple(tuple(row) for row in t)

    def residual(f_flat):
        t = theta(f_flat)
        cols = [_column(t, i) for i in range(d)]
        out = []
        for i in range(d):
            for j in range(d):
                lhs = matvec(t, a.c[i][j])
                rhs = b.bracket(cols[i], cols[j])
                out.extend(x - y for x, y in zip(lhs, rhs))
        return out

    k = m * n
    zero = [Fraction(0)] * k
    r0 = residual(zero)
    units = []
    for q in range(k):
        e = list(zero)
        e[q] = Fraction(1)
        units.append([x - y for x, y in zip(residual(e), r0)])
    red = RowReducer(k + 1)
    for row in range(len(r0)):
        red.add([u[row] for u in units] + [-r0[row]])
    if k in red.rows:
        return None
    sol = [Fraction(0)] * k
    for p, row in red.rows.items():
        sol[p] = row.get(k, Fraction(0))
    t = theta(sol)
    if any(residual(sol)) or determinant(t) == 0:
        return None
    return t


def is_isomorphism(a: AlgebraTable, b: AlgebraTable, t) -> bool:
    d = a.dim
    if determinant(t) == 0:
        return False
    cols = [_column(t, i) for i in range(d)]
    return all(matvec(t, a.c[i][j]) == b.bracket(cols[i], cols[j]) for i in range(d) for j in range(d))


# -- fingerprints as non-isomorphism certificates -----------------------------

@dataclass(frozen=True)
class Certificate:
    status: str  # "distinct" or "indistinguishable"
    field: str | None = None
    left: object = None
    right: object = None


def nonisomorphism_certificate(a1: AlgebraTable, a2: AlgebraTable) -> Certificate:
    """First fingerprint field that differs. Indistinguishable is not an isomorphism proof."""
    f1, f2 = fingerprint(a1).as_dict(), fingerprint(a2).as_dict()
    for key in f1:
        if f1[key] != f2[key]:
            return Certificate("distinct", key, f1[key], f2[key])
    return Certificate("indistinguishable")
