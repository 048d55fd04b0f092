"""Abelian (and general) extensions g(omega, l, r) on g + h.

The bracket is ``[x+a, y+b] = [x,y] + omega(x,y) + l_x b + r_y a + [a,b]_h``;
basis order of the result is the basis of g followed by the basis of h.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    DEFAULT_TRIALS,
    AlgebraTable,
    NilradicalVerdict,
    derived_series,
    leibniz_check,
    verify_nilradical,
)
from .cohomology import BilinearMap, RepresentationPair, cocycle_check, rep_check
from .linalg import RowReducer, SubspaceBasis, combine, matvec, unit_vector


@dataclass(frozen=True)
class ExtensionSpec:
    g: AlgebraTable
    h: AlgebraTable
    rep: RepresentationPair
    omega: BilinearMap

    def __post_init__(self):
        if self.rep.g.dim != self.g.dim or self.omega.g_dim != self.g.dim:
            raise ValueError("representation and cocycle must live on g")
        if self.rep.h_dim != self.h.dim or self.omega.h_dim != self.h.dim:
            raise ValueError("representation and cocycle must take values in h")


def abelian_module(labels, name: str = "h") -> AlgebraTable:
    return AlgebraTable.from_products(list(labels), {}, name)


def build_extension(s: ExtensionSpec, name: str = "") -> AlgebraTable:
    g, h = s.g, s.h
    n, m = g.dim, h.dim
    d = n + m
    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for k, v in enumerate(g.c[i][j]):
                c[i][j][k] = v
            for t, v in enumerate(s.omega.value(i, j)):
                c[i][j][n + t] = v
        for b in range(m):
            for t in range(m):
                c[i][n + b][n + t] = s.rep.l[i][t][b]  # [x, a_b] = l_x a_b
                c[n + b][i][n + t] = s.rep.r[i][t][b]  # [a_b, x] = r_x a_b
    for a in range(m):
        for b in range(m):
            for t, v in enumerate(h.c[a][b]):
                c[n + a][n + b][n + t] = v
    labels = tuple(g.basis_labels) + tuple(h.basis_labels)
    if len(set(labels)) != d:
        raise ValueError("g and h labels overlap")
    return AlgebraTable(d, labels, tuple(tuple(tuple(v) for v in row) for row in c), name)


# -- the compatibility identities ---------------------------------------------

IDENTITIES = (
    "g_leibniz",
    "h_leibniz",
    "r_derivation",      # r_x[a,b] = [r_x a, b] + [a, r_x b]
    "l_derivation",      # l_x[a,b] = [l_x a, b] - [l_x b, a]
    "sum_annihilates",   # [a, l_x b + r_x b] = 0
    "r_commutator",      # r_y r_x - r_x r_y = r_[x,y] + ad^R_{omega(x,y)}
    "l_commutator",      # r_y l_x - l_x r_y = l_[x,y] + ad^L_{omega(x,y)}
    "l_absorbs",         # l_x (l_y + r_y) = 0
    "cocycle",
)


def _hb(h: AlgebraTable, u, v):
    return h.bracket(u, v)


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def validity_check(s: ExtensionSpec) -> tuple[bool, list]:
    """Check every identity making g + h a Leibniz algebra.

    Returns ``(ok, failures)`` where each failure is ``(identity, indices)``.
    Equivalent to ``leibniz_check(build_extension(s))``; the identities just
    split the check by how many arguments come from h.
    """
    g, h, p, w = s.g, s.h, s.rep, s.omega
    n, m = g.dim, h.dim
    eh = [unit_vector(m, a) for a in range(m)]
    fails: list = []

    if not leibniz_check(g)[0]:
        fails.append(("g_leibniz", ()))
    if not leibniz_check(h)[0]:
        fails.append(("h_leibniz", ()))

    def ad_r(v):  # a -> [a, v]
        return tuple(h.bracket(eh[a], v) for a in range(m))

    def ad_l(v):  # a -> [v, a]
        return tuple(h.bracket(v, eh[a]) for a in range(m))

    for i in range(n):
        lx, rx = p.l[i], p.r[i]
        for a in range(m):
            for b in range(m):
                ab = h.c[a][b]
                ra, rb = matvec(rx, eh[a]), matvec(rx, eh[b])
                la, lb = matvec(lx, eh[a]), matvec(lx, eh[b])
                if any(_sub(matvec(rx, ab), _add(_hb(h, ra, eh[b]), _hb(h, eh[a], rb)))):
                    fails.append(("r_derivation", (i, a, b)))
                if any(_sub(matvec(lx, ab), _sub(_hb(h, la, eh[b]), _hb(h, lb, eh[a])))):
                    fails.append(("l_derivation", (i, a, b)))
                if any(_hb(h, eh[a], _add(lb, rb))):
                    fails.append(("sum_annihilates", (i, a, b)))

    for i in range(n):
        for j in range(n):
            xy = g.c[i][j]
            wxy = w.value(i, j)
            rx, ry, lx, ly = p.r[i], p.r[j], p.l[i], p.l[j]
            rxy, lxy = p.r_of(xy), p.l_of(xy)
            adr, adl = ad_r(wxy), ad_l(wxy)
            for a in range(m):
                lhs = _sub(matvec(ry, matvec(rx, eh[a])), matvec(rx, matvec(ry, eh[a])))
                if any(_sub(lhs, _add(matvec(rxy, eh[a]), adr[a]))):
                    fails.append(("r_commutator", (i, j, a)))
                    break
            for a in range(m):
                lhs = _sub(matvec(ry, matvec(lx, eh[a])), matvec(lx, matvec(ry, eh[a])))
                if any(_sub(lhs, _add(matvec(lxy, eh[a]), adl[a]))):
                    fails.append(("l_commutator", (i, j, a)))
                    break
            for a in range(m):
                if any(matvec(lx, _add(matvec(ly, eh[a]), matvec(ry, eh[a])))):
                    fails.append(("l_absorbs", (i, j, a)))
                    break

    ok_c, bad_c = cocycle_check(p, w)
    fails.extend(("cocycle", t) for t in bad_c)
    return not fails, fails


def abelian_validity(s: ExtensionSpec) -> bool:
    """rep_check and cocycle_check together (the abelian-h criterion)."""
    return rep_check(s.rep)[0] and cocycle_check(s.rep, s.omega)[0]


# -- nilradical lemma ---------------------------------------------------------

def g_omega0(s: ExtensionSpec, nilradical: SubspaceBasis, *, two_sided: bool = False) -> SubspaceBasis:
    """{X in N : omega(N, X) = 0}, or also omega(X, N) = 0 when ``two_sided``."""
    n, m = s.g.dim, s.h.dim
    nv = nilradical.vectors
    k = len(nv)
    red = RowReducer(k)
    for u in nv:
        for t in range(m):
            # sum_q x_q omega(u, v_q)[t] = 0
            red.add([s.omega(u, v)[t] for v in nv])
            if two_sided:
                red.add([s.omega(v, u)[t] for v in nv])
    gens = [combine(sol, nv, n) for sol in red.nullspace()]
    return SubspaceBasis.span(n, gens)


def subalgebra_center(a: AlgebraTable, s: SubspaceBasis) -> SubspaceBasis:
    """{z in s : [z, s] = [s, z] = 0}."""
    sv = s.vectors
    k = len(sv)
    red = RowReducer(k)
    for u in sv:
        left = [a.bracket(v, u) for v in sv]
        right = [a.bracket(u, v) for v in sv]
        for col in range(a.dim):
            red.add([x[col] for x in left])
            red.add([x[col] for x in right])
    return SubspaceBasis.span(a.dim, [combine(sol, sv, a.dim) for sol in red.nullspace()])


def embed(v, total: int):
    return tuple(v) + (Fraction(0),) * (total - len(v))


@dataclass(frozen=True)
class LemmaReport:
    in_kernel: bool             # N inside ker l and ker r
    nilradical: NilradicalVerdict
    center_is_h: bool           # Z(N-hat) == h, computed directly
    criterion: bool             # G_omega0 meet Z(N) == 0
    center_dim: int
    g_omega0_dim: int
    solvable: bool
    lemma_violation: bool
    # same comparison with omega required to vanish on both sides
    criterion_two_sided: bool = True
    two_sided_violation: bool = False

    @property
    def ok(self) -> bool:
        return self.nilradical.ok and not self.lemma_violation


def nilradical_lemma_check(
    s: ExtensionSpec,
    nilradical: SubspaceBasis,
    *,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> LemmaReport:
    n, m = s.g.dim, s.h.dim
    ext = build_extension(s)
    d = n + m
    in_kernel = all(
        not any(x for row in s.rep.l_of(v) for x in row) and not any(x for row in s.rep.r_of(v) for x in row)
        for v in nilradical.vectors
    )
    h_sub = SubspaceBasis.coordinate(d, range(n, d))
    n_hat = SubspaceBasis.span(d, [embed(v, d) for v in nilradical.vectors]) + h_sub
    verdict = verify_nilradical(ext, n_hat, trials=trials, seed=seed)
    z_hat = subalgebra_center(ext, n_hat)
    center_is_h = z_hat == h_sub

    # Z(N) computed inside g restricted to N
    z_n = subalgebra_center(s.g, nilradical)
    gw = g_omega0(s, nilradical)
    meet = gw.intersection(z_n)
    criterion = meet.dim == 0

    meet2 = g_omega0(s, nilradical, two_sided=True).intersection(z_n)

    def disagrees(m):
        # the direct center must be (G meet Z(N)) + h, so both sides must agree
        expected = SubspaceBasis.span(d, [embed(v, d) for v in m.vectors]) + h_sub
        return in_kernel and (center_is_h != (m.dim == 0) or expected != z_hat)

    solvable = derived_series(ext)[-1].dim == 0
    return LemmaReport(in_kernel, verdict, center_is_h, criterion, z_hat.dim, gw.dim, solvable,
                       disagrees(meet), meet2.dim == 0, disagrees(meet2))


__all__ = [
    "ExtensionSpec",
    "IDENTITIES",
    "LemmaReport",
    "abelian_module",
    "abelian_validity",
    "build_extension",
    "g_omega0",
    "nilradical_lemma_check",
    "subalgebra_center",
    "validity_check",
]
