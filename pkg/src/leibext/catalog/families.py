"""Automorphism families of the catalog algebras."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..orbit import AutFamily
from .tables import five_dim, r_algebra


def r_family(n: int, *, printed: bool = False) -> AutFamily:
    """phi(e_j) = sum_{i>=j} a^j b^(i-j)/(i-j)! e_i, phi(x) = x + sum b^i/i! e_i.

    With ``printed=True`` the translation part uses b^i/n! instead, which is
    kept only to show that it does not give automorphisms.
    """

    def build(v):
        a, b = v["a"], v["b"]
        im = {}
        for j in range(1, n + 1):
            im[f"e{j}"] = {f"e{i}": a**j * b ** (i - j) / factorial(i - j) for i in range(j, n + 1)}
        den = (lambda i: factorial(n)) if printed else factorial
        im["x"] = {"x": 1, **{f"e{i}": Fraction(b**i, den(i)) for i in range(1, n + 1)}}
        return im

    return AutFamily(f"R{n}" + ("_printed" if printed else ""), r_algebra(n), ("a", "b"), ("a",), build, ("a",))


def _h_phi1(v):
    a1, a2, a3, a4, a5 = (v[k] for k in ("a1", "a2", "a3", "a4", "a5"))
    return {
        "e1": {"e1": a1, "e3": a2},
        "e2": {"e2": a3, "e3": a4},
        "e3": {"e3": a1 * a3},
        "x1": {"x1": 1, "e1": a4 / a3, "e3": a2 * a4 / (a1 * a3) + a5},
        "x2": {"x2": 1, "e2": -a2 / a1, "e3": a5},
    }


def _h_phi2(v):
    a1, a2, a3, a4, a5 = (v[k] for k in ("a1", "a2", "a3", "a4", "a5"))
    return {
        "e1": {"e2": a1, "e3": a2},
        "e2": {"e1": -a3, "e3": a4},
        "e3": {"e3": a1 * a3},
        "x1": {"x2": 1, "e2": a4 / a3, "e3": a2 * a4 / (a1 * a3) + a5},
        "x2": {"x1": 1, "e1": a2 / a1, "e3": a5},
    }


def _l1(v):
    a1, a2 = v["a1"], v["a2"]
    return {"e1": {"e1": a1}, "e2": {"e2": a2}, "e3": {"e3": a1 * a2}, "x1": {"x1": 1}, "x2": {"x2": 1}}


def _l2(v):
    a1, a2, a3 = v["a1"], v["a2"], v["a3"]
    return {
        "e1": {"e1": a1, "e3": -a1 * a3},
        "e2": {"e2": a2},
        "e3": {"e3": a1 * a1},
        "x1": {"x1": 1, "e1": a3, "e3": -a3 * a3 / 2},
        "x2": {"x2": 1},
    }


def _l3(v):
    im = _l2(v)
    im["x2"] = {"x2": 1, "e2": v["a4"]}
    return im


_P5 = ("a1", "a2", "a3", "a4", "a5")


def five_dim_families(name: str) -> tuple[AutFamily, ...]:
    g = five_dim(name)
    if name == "H":
        return (
            AutFamily("H_phi1", g, _P5, ("a1", "a3"), _h_phi1, ("a1", "a3")),
            AutFamily("H_phi2", g, _P5, ("a1", "a3"), _h_phi2, ("a1", "a3")),
        )
    if name == "L1":
        return (AutFamily("L1_phi", g, ("a1", "a2"), ("a1", "a2"), _l1, ("a1", "a2")),)
    if name == "L2":
        return (AutFamily("L2_phi", g, ("a1", "a2", "a3"), ("a1", "a2"), _l2, ("a1", "a2")),)
    if name == "L3":
        return (AutFamily("L3_phi", g, ("a1", "a2", "a3", "a4"), ("a1", "a2"), _l3, ("a1", "a2")),)
    raise KeyError(name)


def families_for(name: str, n: int | None = None) -> tuple[AutFamily, ...]:
    if name == "R":
        return (r_family(n),)
    return five_dim_families(name)
