"""Multiplication tables of the catalog algebras, written as product lists.

A product list is ``[a,b]=expr; ...`` where ``expr`` is a signed sum of
``coef*label`` terms; the coefficients may use the family parameter ``d``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ..algebra import AlgebraTable
from .expr import evaluate

_TERM = re.compile(r"\s*([+-]?)\s*(?:(\([^()]*\)|[0-9a-z/]+)\s*\*)?\s*([a-z]+[0-9]*)\s*")


def parse_products(text: str, env: Mapping[str, object] | None = None) -> dict:
    env = dict(env or {})
    out: dict = {}
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        lhs, rhs = item.split("=")
        a, b = (s.strip() for s in lhs.strip().strip("[]").split(","))
        if (a, b) in out:
            raise ValueError(f"duplicate product [{a},{b}]")
        value: dict = {}
        pos = 0
        rhs = rhs.strip()
        while pos < len(rhs):
            m = _TERM.match(rhs, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {rhs!r}")
            sign, coef, lab = m.groups()
            c = evaluate(coef, env) if coef else Fraction(1)
            if sign == "-":
                c = -c
            value[lab] = value.get(lab, 0) + c
            pos = m.end()
        out[(a, b)] = value
    return out


def table(labels, text: str, name: str, env=None) -> AlgebraTable:
    return AlgebraTable.from_products(labels, parse_products(text, env), name)


# -- base algebras -------------------------------------------------------------

def nf_labels(n: int) -> list[str]:
    return [f"e{i}" for i in range(1, n + 1)]


def nf(n: int) -> AlgebraTable:
    return table(nf_labels(n), "; ".join(f"[e{i},e1]=e{i + 1}" for i in range(1, n)), f"NF{n}")


def r_labels(n: int) -> list[str]:
    # x last, so that index n+1 is x
    return nf_labels(n) + ["x"]


def r_products(n: int) -> str:
    items = [f"[e{i},e1]=e{i + 1}" for i in range(1, n)]
    items += [f"[e{i},x]=-{i}*e{i}" for i in range(1, n + 1)]
    items.append("[x,e1]=e1")
    return "; ".join(items)


def r_algebra(n: int) -> AlgebraTable:
    return table(r_labels(n), r_products(n), f"R{n}")


def r_hat_labels(n: int) -> list[str]:
    return ["x"] + [f"e{i}" for i in range(1, n + 2)]


def r_hat(n: int) -> AlgebraTable:
    """The unique extension of R with non-split nilradical, in the order x, e1..e(n+1)."""
    items = [f"[e{i},e1]=e{i + 1}" for i in range(1, n + 1)]
    items.append("[x,e1]=e1")
    items += [f"[e{i},x]=-{i}*e{i}" for i in range(1, n + 2)]
    return table(r_hat_labels(n), "; ".join(items), f"R_hat{n}")


FIVE = ["e1", "e2", "e3", "x1", "x2"]
SIX = ["e1", "e2", "e3", "e4", "x1", "x2"]

# [x2,e2] is printed without its sign; the table stores [x2,e2]=-e2
H_TEXT = ("[e1,e2]=e3; [e2,e1]=-e3; [e1,x1]=e1; [x1,e1]=-e1; [e3,x1]=e3; [x1,e3]=-e3;"
          " [e2,x2]=e2; [x2,e2]=-e2; [e3,x2]=e3; [x2,e3]=-e3")
H_TEXT_ALT = H_TEXT.replace("[x2,e2]=-e2", "[x2,e2]=e2")
L1_TEXT = "[e2,e1]=e3; [e1,x1]=e1; [x1,e1]=-e1; [e3,x1]=e3; [e2,x2]=e2; [e3,x2]=e3"
L2_TEXT = "[e1,e1]=e3; [e1,x1]=e1; [x1,e1]=-e1; [e3,x1]=2*e3; [e2,x2]=e2"
L3_TEXT = L2_TEXT + "; [x2,e2]=-e2"

BASE_TEXT = {"H": H_TEXT, "L1": L1_TEXT, "L2": L2_TEXT, "L3": L3_TEXT}


def five_dim(name: str) -> AlgebraTable:
    return table(FIVE, BASE_TEXT[name], name)


def h_alternative() -> AlgebraTable:
    """H with the unsigned line read as [x2,e2]=+e2 (kept to show it fails)."""
    return table(FIVE, H_TEXT_ALT, "H_alt")


# -- classified extensions ----------------------------------------------------

@dataclass(frozen=True)
class Classified:
    """A classified extension together with the (action, cocycle) it comes from.

    ``action`` is (al1, al2, be1, be2): l_x1, r_x1, l_x2, r_x2 on e4.
    ``omega`` is a product list restricted to g x g with values in e4.
    """

    name: str
    base: str
    case: str
    action: tuple
    omega: str
    text: str
    family: bool = False
    tag: str = ""
    printed: str = ""  # the table as printed, when it differs from ``text``
    erratum: str = ""


def _with(base: str, extra: str, replace: Mapping[str, str] | None = None) -> str:
    items = [s.strip() for s in BASE_TEXT[base].split(";")]
    for old, new in (replace or {}).items():
        items = [new if s == old else s for s in items]
    return "; ".join(items) + "; " + extra


CLASSIFIED = (
    Classified("H_hat_1", "H", "I", (0, 1, 0, 0), "[x2,e1]=e4",
               _with("H", "[e4,x1]=e4; [x2,e1]=e4"), tag="thmH"),
    Classified("H_hat_2", "H", "III", (0, 2, 0, 0), "[e1,e1]=e4",
               _with("H", "[e1,e1]=e4; [e4,x1]=2*e4"), tag="thmH"),
    Classified("H_hat_3", "H", "V", (0, 1, 0, 1), "[e1,e2]=e4; [e2,e1]=e4; [x1,e3]=-e4; [x2,e3]=e4",
               _with("H", "[e4,x1]=e4; [e4,x2]=e4",
                     {"[e1,e2]=e3": "[e1,e2]=e3+e4", "[e2,e1]=-e3": "[e2,e1]=-e3+e4",
                      "[x1,e3]=-e3": "[x1,e3]=-e3-e4", "[x2,e3]=-e3": "[x2,e3]=-e3+e4"}), tag="thmH",
               printed=_with("H", "[e4,x1]=e4; [e4,x2]=e4",
                             {"[e1,e2]=e3": "[e1,e2]=e3+e4", "[e2,e1]=-e3": "[e2,e1]=-e3+e4",
                              "[x1,e3]=-e3": "[x1,e3]=-e3+e4", "[x2,e3]=-e3": "[x2,e3]=-e3+e4"}),
               erratum="[x1,e3] printed as -e3+e4; stored as -e3-e4"),
    Classified("H_hat_4", "H", "VII", (-1, 1, 0, 0), "[e1,x1]=e4; [x1,e1]=-e4",
               _with("H", "[e4,x1]=e4; [x1,e4]=-e4",
                     {"[e1,x1]=e1": "[e1,x1]=e1+e4", "[x1,e1]=-e1": "[x1,e1]=-e1-e4"}), tag="thmH"),
    Classified("H_hat_5", "H", "VII", (-1, 1, 0, 0), "[e1,x1]=d*e4; [x1,e1]=-d*e4; [e1,x2]=e4; [x2,e1]=-e4",
               _with("H", "[e1,x2]=e4; [x2,e1]=-e4; [e4,x1]=e4; [x1,e4]=-e4",
                     {"[e1,x1]=e1": "[e1,x1]=e1+d*e4", "[x1,e1]=-e1": "[x1,e1]=-e1-d*e4"}),
               family=True, tag="thmH"),
    Classified("H_hat_6", "H", "X", (-2, 2, -1, 1), "[e1,e3]=e4; [e3,e1]=-e4",
               _with("H", "[e1,e3]=e4; [e3,e1]=-e4; [e4,x1]=2*e4; [x1,e4]=-2*e4; [e4,x2]=e4; [x2,e4]=-e4"),
               tag="thmH"),
    Classified("L1_hat_1", "L1", "I", (0, 1, 0, 0), "[x2,e1]=e4",
               _with("L1", "[x2,e1]=e4; [e4,x1]=e4"), tag="thmL1"),
    Classified("L1_hat_2", "L1", "II", (0, 2, 0, 0), "[e1,e1]=e4",
               _with("L1", "[e1,e1]=e4; [e4,x1]=2*e4"), tag="thmL1"),
    Classified("L1_hat_3", "L1", "III", (0, 2, 0, 1), "[e3,e1]=e4",
               _with("L1", "[e3,e1]=e4; [e4,x1]=2*e4; [e4,x2]=e4"), tag="thmL1"),
    Classified("L1_hat_4", "L1", "IV", (0, 0, 0, 1), "[e2,x1]=e4",
               _with("L1", "[e2,x1]=e4; [e4,x2]=e4"), tag="thmL1"),
    Classified("L1_hat_5", "L1", "IV", (0, 0, 0, 1), "[e2,x1]=d*e4; [e2,x2]=e4",
               _with("L1", "[e2,x1]=d*e4; [e4,x2]=e4", {"[e2,x2]=e2": "[e2,x2]=e2+e4"}),
               family=True, tag="thmL1"),
    Classified("L1_hat_6", "L1", "VI", (-1, 1, 0, 0), "[e1,x1]=e4; [x1,e1]=-e4",
               _with("L1", "[e4,x1]=e4; [x1,e4]=-e4",
                     {"[e1,x1]=e1": "[e1,x1]=e1+e4", "[x1,e1]=-e1": "[x1,e1]=-e1-e4"}), tag="thmL1"),
    Classified("L1_hat_7", "L1", "VI", (-1, 1, 0, 0), "[e1,x1]=d*e4; [x1,e1]=-d*e4; [e1,x2]=e4; [x2,e1]=-e4",
               _with("L1", "[e1,x2]=e4; [x2,e1]=-e4; [e4,x1]=e4; [x1,e4]=-e4",
                     {"[e1,x1]=e1": "[e1,x1]=e1+d*e4", "[x1,e1]=-e1": "[x1,e1]=-e1-d*e4"}),
               family=True, tag="thmL1"),
    Classified("L2_hat_1", "L2", "1", (0, 1, 0, 0), "[x2,e1]=e4",
               _with("L2", "[x2,e1]=e4; [e4,x1]=e4"), tag="thmL2"),
    Classified("L2_hat_2", "L2", "2", (0, 3, 0, 0), "[e3,e1]=e4",
               _with("L2", "[e3,e1]=e4; [e4,x1]=3*e4"), tag="thmL2"),
    Classified("L2_hat_3", "L2", "3", (0, 0, 0, 1), "[e2,x1]=e4",
               _with("L2", "[e2,x1]=e4; [e4,x2]=e4"), tag="thmL2"),
    Classified("L2_hat_4", "L2", "3", (0, 0, 0, 1), "[e2,x1]=d*e4; [e2,x2]=e4",
               _with("L2", "[e2,x1]=d*e4; [e4,x2]=e4", {"[e2,x2]=e2": "[e2,x2]=e2+e4"}),
               family=True, tag="thmL2",
               printed=_with("L2", "[e2,x1]=d*e4; [e1,x2]=e4; [e4,x2]=e4", {"[e2,x2]=e2": "[e2,x2]=e2+e4"}),
               erratum="printed with an extra [e1,x2]=e4; stored without it"),
    Classified("L2_hat_5", "L2", "4", (0, 1, 0, 1), "[e2,e1]=e4",
               _with("L2", "[e2,e1]=e4; [e4,x1]=e4; [e4,x2]=e4"), tag="thmL2"),
    Classified("L2_hat_6", "L2", "6", (-1, 1, 0, 0), "[e1,x1]=e4; [x1,e1]=-e4",
               _with("L2", "[e4,x1]=e4; [x1,e4]=-e4",
                     {"[e1,x1]=e1": "[e1,x1]=e1+e4", "[x1,e1]=-e1": "[x1,e1]=-e1-e4"}), tag="thmL2"),
    Classified("L2_hat_7", "L2", "6", (-1, 1, 0, 0), "[e1,x1]=d*e4; [x1,e1]=-d*e4; [e1,x2]=e4; [x2,e1]=-e4",
               _with("L2", "[e1,x2]=e4; [x2,e1]=-e4; [e4,x1]=e4; [x1,e4]=-e4",
                     {"[e1,x1]=e1": "[e1,x1]=e1+d*e4", "[x1,e1]=-e1": "[x1,e1]=-e1-d*e4"}),
               family=True, tag="thmL2"),
    Classified("L3_hat_1", "L3", "1", (0, 1, 0, 0), "[x2,e1]=e4",
               _with("L3", "[x2,e1]=e4; [e4,x1]=e4"), tag="thmL3"),
    Classified("L3_hat_2", "L3", "2", (0, 3, 0, 0), "[e3,e1]=e4",
               _with("L3", "[e3,e1]=e4; [e4,x1]=3*e4"), tag="thmL3"),
    Classified("L3_hat_3", "L3", "3", (0, 0, 0, 1), "[x1,e2]=e4",
               _with("L3", "[x1,e2]=e4; [e4,x2]=e4"), tag="thmL3"),
    Classified("L3_hat_4", "L3", "4", (0, 0, 0, 2), "[e2,e2]=e4",
               _with("L3", "[e2,e2]=e4; [e4,x2]=2*e4"), tag="thmL3"),
    Classified("L3_hat_5", "L3", "6", (-1, 1, 0, 0), "[e1,x1]=e4; [x1,e1]=-e4",
               _with("L3", "[e4,x1]=e4; [x1,e4]=-e4",
                     {"[e1,x1]=e1": "[e1,x1]=e1+e4", "[x1,e1]=-e1": "[x1,e1]=-e1-e4"}), tag="thmL3"),
    Classified("L3_hat_6", "L3", "6", (-1, 1, 0, 0), "[e1,x1]=d*e4; [x1,e1]=-d*e4; [e1,x2]=e4; [x2,e1]=-e4",
               _with("L3", "[e1,x2]=e4; [x2,e1]=-e4; [e4,x1]=e4; [x1,e4]=-e4",
                     {"[e1,x1]=e1": "[e1,x1]=e1+d*e4", "[x1,e1]=-e1": "[x1,e1]=-e1-d*e4"}),
               family=True, tag="thmL3"),
    Classified("L3_hat_7", "L3", "7", (0, 0, -1, 1), "[e2,x1]=e4; [x1,e2]=-e4",
               _with("L3", "[e2,x1]=e4; [x1,e2]=-e4; [e4,x2]=e4; [x2,e4]=-e4"), tag="thmL3"),
    Classified("L3_hat_8", "L3", "7", (0, 0, -1, 1), "[e2,x1]=d*e4; [x1,e2]=-d*e4; [e2,x2]=e4; [x2,e2]=-e4",
               _with("L3", "[e2,x1]=d*e4; [x1,e2]=-d*e4; [e4,x2]=e4; [x2,e4]=-e4",
                     {"[e2,x2]=e2": "[e2,x2]=e2+e4", "[x2,e2]=-e2": "[x2,e2]=-e2-e4"}),
               family=True, tag="thmL3"),
)

CLASSIFIED_BY_NAME = {c.name: c for c in CLASSIFIED}


def classified_table(name: str, delta=None, *, printed: bool = False) -> AlgebraTable:
    c = CLASSIFIED_BY_NAME[name]
    env = {"d": delta if delta is not None else 0}
    text = c.printed if printed and c.printed else c.text
    return table(SIX, text, name, env)
