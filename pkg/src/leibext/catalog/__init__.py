"""Named algebras, representation cases, printed cocycle bases and expected dimensions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import AlgebraTable, span_of_labels
from ..cohomology import BilinearMap, RepresentationPair
from ..linalg import SubspaceBasis, frac
from .bases import BASIS_ERRATA, CatalogCase, all_cases
from .expr import linear_terms
from .tables import (
    CLASSIFIED,
    CLASSIFIED_BY_NAME,
    SIX,
    Classified,
    classified_table,
    five_dim,
    h_alternative,
    nf,
    nf_labels,
    r_algebra,
    r_hat,
    r_hat_labels,
    r_labels,
)

FIVE_DIM = ("H", "L1", "L2", "L3")
FAMILY_NAMES = ("NF", "R", "R_hat")
DELTAS = (Fraction(0), Fraction(1), Fraction(2), Fraction(-1))
NAMES = FAMILY_NAMES + FIVE_DIM + tuple(c.name for c in CLASSIFIED)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parameters: dict = field(hash=False)
    table: AlgebraTable
    nilradical: SubspaceBasis | None
    relabeling: tuple  # position i of the published basis order is table basis index relabeling[i]

    def source_order(self) -> AlgebraTable:
        return self.table.permuted(self.relabeling)


def _need_n(params: dict, low: int = 2) -> int:
    if "n" not in params:
        raise ValueError("parameter n is required")
    n = params["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < low:
        raise ValueError(f"invalid parameter n={n!r}: need an integer >= {low}")
    return n


def get(name: str, **params) -> CatalogEntry:
    """Instantiate a catalog algebra; ``n`` for NF, R, R_hat and ``delta`` for families."""
    if name == "NF":
        n = _need_n(params)
        t = nf(n)
        return CatalogEntry(name, {"n": n}, t, SubspaceBasis.full(n), tuple(range(n)))
    if name == "R":
        n = _need_n(params)
        t = r_algebra(n)
        return CatalogEntry(name, {"n": n}, t, span_of_labels(t, nf_labels(n)), tuple(range(n + 1)))
    if name == "R_hat":
        n = _need_n(params)
        # built order is e1..en, x, e(n+1); stored in that order
        t = r_hat(n).permuted([*range(1, n + 1), 0, n + 1])
        nil = span_of_labels(t, [f"e{i}" for i in range(1, n + 2)])
        relabel = tuple(t.index(lab) for lab in r_hat_labels(n))
        return CatalogEntry(name, {"n": n}, t, nil, relabel)
    if name in FIVE_DIM:
        _no_params(name, params)
        t = five_dim(name)
        return CatalogEntry(name, {}, t, span_of_labels(t, ["e1", "e2", "e3"]), tuple(range(5)))
    if name in CLASSIFIED_BY_NAME:
        c = CLASSIFIED_BY_NAME[name]
        delta = None
        if c.family:
            delta = frac(params.pop("delta", 0))
        _no_params(name, params)
        listed = classified_table(name, delta)
        built_order = ["e1", "e2", "e3", "x1", "x2", "e4"]
        t = listed.permuted([listed.index(lab) for lab in built_order])
        relabel = tuple(t.index(lab) for lab in SIX)
        nil = span_of_labels(t, ["e1", "e2", "e3", "e4"])
        return CatalogEntry(name, {"delta": delta} if c.family else {}, t, nil, relabel)
    raise KeyError(f"unknown catalog algebra {name!r}")


def _no_params(name, params):
    if params:
        raise ValueError(f"{name} takes no parameters {sorted(params)}")


def all_entries(n_range=range(2, 7), hat_range=range(2, 6), deltas=DELTAS) -> list[CatalogEntry]:
    out = [get("NF", n=n) for n in n_range]
    out += [get("R", n=n) for n in n_range]
    out += [get(name) for name in FIVE_DIM]
    out += [get("R_hat", n=n) for n in hat_range]
    for c in CLASSIFIED:
        if c.family:
            out += [get(c.name, delta=d) for d in deltas]
        else:
            out.append(get(c.name))
    return out


# -- representations and printed bases ---------------------------------------

def representation(name: str, point, n: int | None = None) -> RepresentationPair:
    """Scalar action on a one-dimensional module.

    R: ``point = (g1, g2)`` with l_x = g1, r_x = g2. H, L1-L3:
    ``point = (al1, al2, be1, be2)`` with l_x1, r_x1, l_x2, r_x2.
    """
    if name == "R":
        g1, g2 = point
        return RepresentationPair.scalar(r_algebra(n), {"x": g1}, {"x": g2})
    a1, a2, b1, b2 = point
    return RepresentationPair.scalar(five_dim(name), {"x1": a1, "x2": b1}, {"x1": a2, "x2": b2})


def case_algebra(case: CatalogCase) -> AlgebraTable:
    return r_algebra(case.n) if case.algebra == "R" else five_dim(case.algebra)


def point_env(case: CatalogCase, point) -> dict:
    if case.algebra == "R":
        return {"g1": point[0], "g2": point[1], "n": case.n}
    return dict(zip(("al1", "al2", "be1", "be2"), point))


_PARAM = re.compile(r"\bb[0-9x]+(?:_[0-9x]+)?\b")


def basis_maps(g: AlgebraTable, text: str, env: dict) -> list[BilinearMap]:
    """One bilinear map per free parameter of a printed basis, at the given action."""
    items = [s.strip() for s in text.split(";") if s.strip()]
    params = sorted({p for it in items for p in _PARAM.findall(it.split(":", 1)[1])})
    vals: dict = {p: {} for p in params}
    for it in items:
        pair, expr = it.split(":", 1)
        a, b = (s.strip() for s in pair.split(","))
        for p, coef in linear_terms(expr, params, env).items():
            key = (a, b)
            vals[p][key] = vals[p].get(key, 0) + coef
    return [BilinearMap.from_values(g, 1, vals[p]) for p in params]


def basis_span(case: CatalogCase, point, *, repaired: bool = False) -> SubspaceBasis:
    g = case_algebra(case)
    text = case.basis
    if repaired and (case.algebra, case.case) in BASIS_ERRATA:
        text = BASIS_ERRATA[(case.algebra, case.case)][0]
    maps = basis_maps(g, text, point_env(case, point))
    return SubspaceBasis.span(g.dim * g.dim, [w.coords for w in maps])


# -- expectations ------------------------------------------------------------

@dataclass(frozen=True)
class ExpectationRow:
    algebra: str
    case: str
    point: tuple
    z2: int
    b2: int
    h2: int
    source: str
    n: int | None = None

    @property
    def label(self) -> str:
        alg = f"R(n={self.n})" if self.algebra == "R" else self.algebra
        pt = ",".join(str(Fraction(x)) for x in self.point)
        return f"{alg} case {self.case} at ({pt})"


def expectations() -> list[ExpectationRow]:
    rows = []
    for case in all_cases():
        for pt in case.points:
            rows.append(ExpectationRow(case.algebra, case.case, tuple(pt), case.z2, case.b2,
                                       case.z2 - case.b2, case.dims_tag, case.n))
    return rows


__all__ = [
    "BASIS_ERRATA",
    "CLASSIFIED",
    "CatalogEntry",
    "Classified",
    "DELTAS",
    "ExpectationRow",
    "NAMES",
    "CatalogCase",
    "all_cases",
    "all_entries",
    "basis_maps",
    "basis_span",
    "case_algebra",
    "classified_table",
    "expectations",
    "get",
    "h_alternative",
    "point_env",
    "r_labels",
    "representation",
]
