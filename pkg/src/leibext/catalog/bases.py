"""Printed cocycle bases and cohomology dimensions, one record per parameter case.

Each basis is a ``;``-separated list of ``left,right: expression`` items, the
expression being linear in free parameters named ``bIJ`` and possibly using the
action scalars ``al1, al2, be1, be2`` (left/right action of x1 and x2 on the
module) or ``g1, g2`` (left/right action of x). Entries not listed are zero.

Generic cases are instantiated at several sample points that avoid every
excluded value; the points are part of the fixture data.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CatalogCase:
    algebra: str
    case: str
    points: tuple  # action scalars, (al1, al2, be1, be2) or (g1, g2)
    z2: int
    b2: int
    basis: str
    dims_tag: str
    basis_tag: str
    generic: bool = False
    n: int | None = None
    notes: tuple = field(default=())


def _h(case, points, z2, b2, basis, generic=False, notes=()):
    return CatalogCase("H", case, tuple(points), z2, b2, basis, "cor4.4", "prop4.3", generic, notes=tuple(notes))


def _l1(case, points, z2, b2, basis, generic=False):
    return CatalogCase("L1", case, tuple(points), z2, b2, basis, "cor4.7", "prop4.6", generic)


def _l2(case, points, z2, b2, basis, generic=False, notes=()):
    return CatalogCase("L2", case, tuple(points), z2, b2, basis, "corL2", "propL2", generic, notes=tuple(notes))


def _l3(case, points, z2, b2, basis, generic=False, notes=()):
    return CatalogCase("L3", case, tuple(points), z2, b2, basis, "corL3", "propL3", generic, notes=tuple(notes))


H_CASES = (
    _h("I", [(0, 1, 0, 0)], 6, 5,
       "e1,e2: b12; e2,e1: -b12; e2,x1: b24; e2,x2: -b24; e3,x2: b12; x1,e1: b41; x1,e3: -b12;"
       " x1,x1: b44; x2,e1: b51; x2,e2: b24; x2,e3: -b12; x2,x1: b54"),
    _h("II", [(0, 0, 0, 1)], 6, 5,
       "e1,e2: b12; e1,x1: b14; e1,x2: -b14; e2,e1: -b12; e3,x1: b12; x1,e1: -b14; x1,e2: b42;"
       " x1,e3: -b12; x1,x2: b45; x2,e2: b52; x2,e3: -b12; x2,x2: b55"),
    _h("III", [(0, 2, 0, 0)], 6, 5,
       "e1,e1: b11; e1,e2: b12; e1,x2: b15; e2,e1: -b12; e2,x1: 2*b25; e2,x2: b25; e3,x1: -b12;"
       " e3,x2: b12; x1,e1: b15; x1,e3: -b12; x1,x1: b44; x2,e2: -b25; x2,e3: -b12; x2,x1: b54"),
    _h("IV", [(0, 0, 0, 2)], 6, 5,
       "e1,e2: b12; e1,x1: b14; e1,x2: -2*b14; e2,e1: -b12; e2,e2: b22; e2,x2: b25; e3,x1: b12;"
       " e3,x2: -b12; x1,e1: -b14; x1,e3: -b12; x1,x2: b45; x2,e2: b25; x2,e3: -b12; x2,x2: b55"),
    _h("V", [(0, 1, 0, 1)], 6, 5,
       "e1,e2: b12; e1,x2: b15; e2,e1: b21; e2,x1: b24; x1,e1: b15; x1,e3: -b12; x1,x1: b44;"
       " x1,x2: b44; x2,e2: b24; x2,e3: b21; x2,x1: b54; x2,x2: b54",
       notes=["b21 is listed independently of b12"]),
    _h("VI", [(0, 3, 0, 4), (0, -1, 0, 5)], 5, 5,
       "e1,e2: b12; e1,x1: (al2-1)*b41; e1,x2: be2*b41; e2,e1: -b12; e2,x1: al2*b52;"
       " e2,x2: (be2-1)*b52; e3,x1: (1-al2)*b12; e3,x2: (1-be2)*b12; x1,e1: b41; x1,e3: -b12;"
       " x1,x1: al2*b44; x1,x2: be2*b44; x2,e2: b52; x2,e3: -b12; x2,x1: al2*b54; x2,x2: be2*b54",
       generic=True),
    _h("VII", [(-1, 1, 0, 0)], 5, 3,
       "e1,e2: b12; e1,x1: b14; e1,x2: b15; e2,e1: -b12; e2,x1: b24; e2,x2: -b24; e3,x2: b12;"
       " x1,e1: -b14; x1,e2: -b24; x1,x2: b45; x2,e1: -b15; x2,e2: b24; x2,e3: -b12; x2,x1: -b45"),
    _h("VIII", [(0, 0, -1, 1)], 5, 3,
       "e1,e2: b12; e1,x1: b14; e1,x2: -b14; e2,e1: -b12; e2,x1: b24; e2,x2: b25; e3,x1: b12;"
       " x1,e1: -b14; x1,e2: -b24; x1,e3: -b12; x1,x2: b45; x2,e1: -b15; x2,e2: -b25; x2,x1: -b45"),
    _h("IX", [(-1, 1, -2, 2)], 5, 4,
       "e1,e2: b12; e1,x2: b15; e2,e1: -b12; e2,e3: b23; e2,x1: b24; e2,x2: b24; e3,e2: -b23;"
       " e3,x2: -b12; x1,e2: -b24; x1,x2: b45; x2,e1: -b15; x2,e2: -b24; x2,e3: b12; x2,x1: -b45"),
    _h("X", [(-2, 2, -1, 1)], 5, 4,
       "e1,e2: b12; e1,e3: b13; e1,x1: b14; e1,x2: b14; e2,e1: -b12; e2,x1: b24; e3,e1: -b13;"
       " e3,x1: -b12; x1,e1: -b14; x1,e2: -b24; x1,e3: b12; x1,x2: b45; x2,e1: -b14; x2,x1: -b45"),
    _h("XI", [(-3, 3, -4, 4), (2, -2, 3, -3)], 4, 4,
       "e1,e2: b12; e1,x1: (1+al1)*b14; e1,x2: be1*b14; e2,e1: -b12; e2,x1: al1*b24;"
       " e2,x2: (1+be1)*b24; e3,x1: (1+al1)*b12; e3,x2: (1+be1)*b12; x1,e1: -(1+al1)*b14;"
       " x1,e2: -al1*b24; x1,e3: -(1+al1)*b12; x1,x2: b45; x2,e1: -be1*b14;"
       " x2,e2: -(1+be1)*b24; x2,e3: -(1+be1)*b12; x2,x1: -b45",
       generic=True),
)

L1_CASES = (
    _l1("I", [(0, 1, 0, 0)], 6, 5,
        "e2,e1: b21; e2,x1: b24; e2,x2: -b24; e3,x2: b21; x1,e1: b41; x1,x1: b44; x2,e1: b51; x2,x1: b54"),
    _l1("II", [(0, 2, 0, 0)], 6, 5,
        "e1,e1: b11; e1,x1: b14; e2,e1: b21; e2,x1: -2*b25; e2,x2: b25; e3,x1: -b21; e3,x2: b21;"
        " x1,e1: b14; x1,x1: b44; x2,x1: b54"),
    _l1("III", [(0, 2, 0, 1)], 6, 5,
        "e1,x1: b14; e1,x2: b14; e2,e1: b21; e2,x1: b24; e3,e1: b31; e3,x1: -b21; x1,e1: b14;"
        " x1,x1: 2*b45; x1,x2: b45; x2,x1: 2*b55; x2,x2: b55"),
    _l1("IV", [(0, 0, 0, 1)], 6, 4,
        "e1,x1: b14; e1,x2: -b14; e2,e1: b21; e2,x1: b24; e2,x2: b25; e3,x1: b21; x1,e1: -b14;"
        " x1,x2: b45; x2,x2: b55"),
    _l1("V", [(0, 3, 0, 4), (0, -1, 0, 5)], 5, 5,
        "e1,x1: (al2-1)*b41; e1,x2: be2*b41; e2,e1: b21; e2,x1: al2*b24; e2,x2: (be2-1)*b24;"
        " e3,x1: (1-al2)*b21; e3,x2: (1-be2)*b21; x1,e1: b41; x1,x1: al2*b45; x1,x2: be2*b45;"
        " x2,x1: al2*b55; x2,x2: be2*b55",
        generic=True),
    _l1("VI", [(-1, 1, 0, 0)], 5, 3,
        "e1,x1: b14; e1,x2: b15; e2,e1: b21; e2,x1: -b25; e2,x2: b25; e3,x2: b21; x1,e1: -b14;"
        " x1,e2: b25; x1,e3: b21; x1,x2: b45; x2,e1: -b15; x2,x1: -b45"),
    _l1("VII", [(-3, 3, -4, 4), (2, -2, 3, -3)], 4, 4,
        "e1,x1: (1+al1)*b15; e1,x2: be1*b15; e2,e1: b21; e2,x1: al1*b25; e2,x2: (1+be1)*b25;"
        " e3,x1: (1+al1)*b21; e3,x2: (1+be1)*b21; x1,e1: -(1+al1)*b15; x1,e2: -al1*b25;"
        " x1,e3: -al1*b21; x1,x2: b45; x2,e1: -be1*b15; x2,e2: -be1*b25; x2,e3: -be1*b21;"
        " x2,x1: -b45",
        generic=True),
)

L2_CASES = (
    _l2("1", [(0, 1, 0, 0)], 6, 5,
        "e1,e1: b11; e2,x1: -b25; e2,x2: b25; e3,x1: b11; x1,e1: b41; x1,x1: b44; x2,e1: b51; x2,x1: b54"),
    _l2("2", [(0, 3, 0, 0)], 6, 5,
        "e1,e1: b11; e1,x1: 2*b41; e2,x1: -3*b25; e2,x2: b25; e3,e1: b31; e3,x1: -b11; x1,e1: b41;"
        " x1,x1: b44; x2,x1: b54"),
    _l2("3", [(0, 0, 0, 1)], 6, 4,
        "e1,e1: b11; e1,x1: b14; e1,x2: -b14; e2,x1: b24; e2,x2: b25; e3,x1: 2*b11; e3,x2: -b11;"
        " x1,e1: -b14; x1,x2: b45; x2,x2: b55"),
    _l2("4", [(0, 1, 0, 1)], 6, 5,
        "e1,e1: b11; e1,x2: b15; e2,e1: b21; e2,x1: b24; e3,x1: b11; e3,x2: -b11; x1,e1: b15;"
        " x1,x1: b44; x1,x2: b44; x2,x1: b55; x2,x2: b55"),
    # the last entry is printed as a second (x2,x1) value; read as (x2,x2)
    _l2("5", [(0, 3, 0, 4), (0, -1, 0, 5)], 5, 5,
        "e1,e1: b11; e1,x1: (al2-1)*b41; e1,x2: be2*b41; e2,x1: al2*b24; e2,x2: (be2-1)*b24;"
        " e3,x1: (2-al2)*b11; e3,x2: -be2*b11; x1,e1: b41; x1,x1: al2*b44; x1,x2: be2*b44;"
        " x2,x1: al2*b54; x2,x2: be2*b54",
        generic=True, notes=["duplicated (x2,x1) entry read as (x2,x2)"]),
    _l2("6", [(-1, 1, 0, 0)], 5, 3,
        "e1,e1: b11; e1,x1: b14; e1,x2: b15; e2,x1: b24; e2,x2: -b24; e3,x1: b11; x1,e1: -b14;"
        " x1,e2: -b24; x1,e3: b11; x1,x2: b45; x2,e1: -b15; x2,x1: -b45"),
    _l2("7", [(-3, 3, -4, 4), (2, -2, 3, -3)], 4, 4,
        "e1,e1: b11; e1,x1: -(1+al1)*b51; e1,x2: -be1*b51; e2,x1: -al1*b52; e2,x2: -(1+be1)*b52;"
        " e3,x1: (2+al1)*b11; e3,x2: be1*b11; x1,e1: (1+al1)*b51; x1,e2: al1*b52;"
        " x1,e3: -al1*b11; x1,x2: b45; x2,e1: be1*b51; x2,e2: be1*b52; x2,e3: -be1*b11;"
        " x2,x1: -b45",
        generic=True),
)

L3_CASES = (
    _l3("1", [(0, 1, 0, 0)], 6, 5,
        "e1,e1: b11; e2,x1: b52; e2,x2: -b52; e3,x1: b11; x1,e1: b41; x1,x1: b44; x2,e1: b51;"
        " x2,e2: b52; x2,x1: b54"),
    _l3("2", [(0, 3, 0, 0)], 6, 5,
        "e1,e1: b11; e1,x1: 2*b41; e2,x1: 3*b52; e2,x2: -b52; e3,e1: b31; e3,x1: -b11; x1,e1: b41;"
        " x1,x1: b44; x2,e2: b52; x2,x1: b54"),
    _l3("3", [(0, 0, 0, 1)], 6, 5,
        "e1,e1: b11; e1,x1: -b41; e1,x2: b41; e3,x1: 2*b11; e3,x2: -b11; x1,e1: b41; x1,e2: b42;"
        " x1,x2: b45; x2,e2: b52; x2,x2: b55"),
    _l3("4", [(0, 0, 0, 2)], 6, 5,
        "e1,e1: b11; e1,x1: -b41; e1,x2: 2*b41; e2,e2: b22; e2,x2: b52; e3,x1: 2*b11;"
        " e3,x2: -2*b11; x1,e1: b41; x1,x2: b45; x2,e2: b52; x2,x2: b55"),
    _l3("5", [(0, 3, 0, 4), (0, -1, 0, 5)], 5, 5,
        "e1,e1: b11; e1,x1: (al2-1)*b41; e1,x2: be2*b41; e2,x1: al2*b52; e2,x2: (be2-1)*b52;"
        " e3,x1: (2-al2)*b11; e3,x2: -be2*b11; x1,e1: b41; x1,x1: al2*b45; x1,x2: be2*b45;"
        " x2,e2: b52; x2,x1: al2*b55; x2,x2: be2*b55",
        generic=True),
    _l3("6", [(-1, 1, 0, 0)], 5, 3,
        "e1,e1: b11; e1,x1: -b41; e1,x2: -b51; e2,x1: b52; e2,x2: -b52; e3,x1: b11; x1,e1: b41;"
        " x1,e2: -b52; x1,e3: b11; x1,x2: b45; x2,e1: b51; x2,e2: b52; x2,x1: -b45"),
    _l3("7", [(0, 0, -1, 1)], 5, 3,
        "e1,e1: b11; e1,x1: -b41; e1,x2: b41; e2,x1: -b42; e2,x2: -b52; e3,x1: 2*b11;"
        " e3,x2: -b11; x1,e1: b41; x1,e2: b42; x1,x2: b45; x2,e1: -b41; x2,e2: b52; x2,e3: b11;"
        " x2,x1: -b45"),
    _l3("8", [(-3, 3, -4, 4), (2, -2, 3, -3)], 4, 4,
        "e1,e1: b11; e1,x1: -(1+al1)*b51; e1,x2: -be1*b51; e2,x1: -al1*b52; e2,x2: -(1+be1)*b52;"
        " e3,x1: (2+al1)*b11; e3,x2: be1*b11; x1,e1: (1+al1)*b51; x1,e2: al1*b52;"
        " x1,e3: -al1*b11; x1,x2: b45; x2,e1: be1*b51; x2,e2: (1+be1)*b52; x2,e3: -be1*b11;"
        " x2,x1: -b45",
        generic=True),
)


def r_basis(n: int, case: str) -> str:
    """Printed cocycle basis of R for the three action cases, basis e1..en, x."""
    items = []
    top = n if case == "1" else n - 1
    for i in range(1, top + 1):
        items.append(f"e{i},e1: b{i}_1")
    items.append("x,e1: bx_1")
    if case == "1":
        items.append("e1,x: n*bx_1")
        items += [f"e{i},x: (n+1-{i})*b{i - 1}_1" for i in range(2, n + 1)]
        items.append("x,x: bx_x")
    elif case == "2":
        items.append("e1,x: -(g2+1)*bx_1")
        items += [f"e{i},x: -({i}+g2)*b{i - 1}_1" for i in range(2, n + 1)]
        items.append("x,x: bx_x")
    else:
        items.append("e1,x: -bx_1")
        items += [f"e{i},x: (g1-{i})*b{i - 1}_1" for i in range(2, n + 1)]
        items += [f"x,e{i}: -g1*b{i - 1}_1" for i in range(2, n + 1)]
    return "; ".join(items)


def r_cases(n: int) -> tuple:
    """Cases 1-3 for R at the sample actions used for reproduction."""
    return (
        CatalogCase("R", "1", ((0, -n - 1),), n + 2, n + 1, r_basis(n, "1"), "cor3.3", "prop3.2", n=n),
        CatalogCase("R", "2", ((0, 0), (0, 1), (0, -n)), n + 1, n + 1, r_basis(n, "2"), "cor3.3", "prop3.2",
                  generic=True, n=n),
        CatalogCase("R", "3", ((1, -1), (-2, 2)), n, n, r_basis(n, "3"), "cor3.3", "prop3.2", generic=True, n=n),
    )


R_SIZES = (2, 3, 4, 5)


def all_cases() -> tuple:
    out = []
    for n in R_SIZES:
        out.extend(r_cases(n))
    return tuple(out) + H_CASES + L1_CASES + L2_CASES + L3_CASES


# Printed bases that do not span the computed cocycle space, with the minimal
# correction that does. The printed text above is left untouched.
BASIS_ERRATA = {
    ("H", "III"): (
        "e1,e1: b11; e1,e2: b12; e1,x1: b15; e2,e1: -b12; e2,x1: 2*b25; e2,x2: -b25; e3,x1: -b12;"
        " e3,x2: b12; x1,e1: b15; x1,e3: -b12; x1,x1: b44; x2,e2: b25; x2,e3: -b12; x2,x1: b54",
        "b15 belongs at (e1,x1), not (e1,x2); the b25 entries at (e2,x2) and (x2,e2) have their signs swapped",
    ),
    ("H", "VIII"): (
        "e1,e2: b12; e1,x1: b14; e1,x2: -b14; e2,e1: -b12; e2,x1: b24; e2,x2: b25; e3,x1: b12;"
        " x1,e1: -b14; x1,e2: -b24; x1,e3: -b12; x1,x2: b45; x2,e1: b14; x2,e2: -b25; x2,x1: -b45",
        "(x2,e1) carries b14, and there is no free parameter b15",
    ),
}
