from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibext import catalog
from leibext.catalog.families import families_for, r_family
from leibext.cohomology import BilinearMap, cocycle_check, compute_B2, compute_H2
from leibext.extension import ExtensionSpec, abelian_module, build_extension
from leibext.harness import classified_spec, r_theorem_spec, theorem_targets
from leibext.linalg import random_rational
from leibext.orbit import (
    Automorphism,
    OrbitElement,
    Target,
    act,
    extension_isomorphism,
    is_isomorphism,
    nonisomorphism_certificate,
    normalize_in_orbit,
    verify_automorphism,
)


def _member(fam, rng):
    return fam(**{p: random_rational(rng, nonzero=p in fam.nonzero) for p in fam.params})


def test_identity_and_inverse():
    a = catalog.get("L2").table
    phi = families_for("L2")[0](a1=2, a2=3, a3=1)
    assert phi.verify() and phi.inverse().verify()
    assert phi.compose(phi.inverse()) == Automorphism.identity(a)


def test_singular_matrix_is_not_an_automorphism():
    a = catalog.get("L1").table
    zero = tuple(tuple(F(0) for _ in range(5)) for _ in range(5))
    assert verify_automorphism(a, zero) == (False, [("singular",)])


def test_printed_r_translation_part_fails():
    assert r_family(3)(a=2, b=1).verify()
    assert not r_family(3, printed=True)(a=2, b=1).verify()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["H", "L1", "L2", "L3"]), st.integers(0, 10**6))
def test_act_is_a_right_action(name, seed):
    rng = random.Random(seed)
    fams = families_for(name)
    p1, p2 = _member(rng.choice(fams), rng), _member(rng.choice(fams), rng)
    l1, l2 = random_rational(rng, True), random_rational(rng, True)
    case = rng.choice([c for c in catalog.all_cases() if c.algebra == name])
    rep = catalog.representation(name, case.points[0])
    h2 = compute_H2(rep)
    w = BilinearMap.zero(5)
    for r in h2.representatives:
        w = w + r.scaled(random_rational(rng))
    el = OrbitElement(w, rep)
    lhs = act(p1, l1, act(p2, l2, el))
    rhs = act(p2.compose(p1), l1 * l2, el)
    assert lhs == rhs
    assert cocycle_check(lhs.rep, lhs.omega)[0]


def test_r_orbit_scaling():
    n = 3
    s = r_theorem_spec(n)
    moved = act(r_family(n)(a=2, b=0), F(5), OrbitElement(s.omega, s.rep))
    assert moved.omega.value(n - 1, 0) == (F(5 * 2 ** (n + 1)),)


def test_normalize_with_explicit_witness():
    n = 2
    s = r_theorem_spec(n)
    fam = r_family(n)
    m = normalize_in_orbit(OrbitElement(s.omega.scaled(7), s.rep), [fam], [Target("R_hat", s.rep, s.omega)],
                           explicit=[(fam.name, {"a": 1}, F(1, 7))])
    assert m.matched and m.witness.source == "explicit"


def test_normalize_falls_back_to_grid():
    n = 2
    s = r_theorem_spec(n)
    fam = r_family(n)
    m = normalize_in_orbit(OrbitElement(s.omega.scaled(4), s.rep), [fam], [Target("R_hat", s.rep, s.omega)])
    assert m.matched and m.witness.source == "grid"


def test_zero_class_is_rejected():
    s = r_theorem_spec(2)
    b = compute_B2(s.rep).maps()[0]
    with pytest.raises(ValueError):
        normalize_in_orbit(OrbitElement(b, s.rep), [r_family(2)], [Target("R_hat", s.rep, s.omega)])


def test_family_coordinate_is_recovered():
    g = catalog.get("H").table
    rep = catalog.representation("H", (-1, 1, 0, 0))
    w = BilinearMap.from_values(g, 1, {("e1", "x1"): 3, ("x1", "e1"): -3, ("e1", "x2"): 2, ("x2", "e1"): -2})
    m = normalize_in_orbit(OrbitElement(w, rep), families_for("H"), theorem_targets("H"))
    assert m.matched and m.target == "H_hat_5" and m.coords == (F(3, 2),)


def test_explicit_isomorphism_between_extensions():
    g = catalog.get("H").table
    rep = catalog.representation("H", (0, 1, 0, 0))
    src = ExtensionSpec(g, abelian_module(["e4"]), rep, BilinearMap.from_values(g, 1, {("x2", "e1"): 5}))
    dst = classified_spec("H_hat_1")
    phi = families_for("H")[0](a1=F(1, 5))
    t = extension_isomorphism(src, phi, 1, dst)
    assert t is not None and is_isomorphism(build_extension(src), build_extension(dst), t)


def test_certificate_separates_h_and_l1():
    cert = nonisomorphism_certificate(catalog.get("H").table, catalog.get("L1").table)
    assert cert.status == "distinct"
    same = nonisomorphism_certificate(catalog.get("H").table, catalog.get("H").table.permuted([4, 3, 2, 1, 0]))
    assert same.status == "indistinguishable"
