from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibext import catalog
from leibext.cohomology import (
    BilinearMap,
    LinearHom,
    RepresentationPair,
    coboundary,
    cocycle_check,
    compute_B2,
    compute_H2,
    compute_Z2,
    reduce_mod_B2,
    rep_check,
)

rats = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def dims(rep):
    h = compute_H2(rep)
    return h.z2.dim, h.b2.dim, h.dim


def test_r4_at_the_special_point():
    assert dims(catalog.representation("R", (0, -5), 4)) == (6, 5, 1)


def test_h_case_vii():
    assert dims(catalog.representation("H", (-1, 1, 0, 0))) == (5, 3, 2)


def test_h_generic_point_has_no_cohomology():
    assert dims(catalog.representation("H", (2, -2, 3, -3))) == (4, 4, 0)


def test_invalid_scalars_are_rejected():
    ok, bad = rep_check(catalog.representation("H", (1, 1, 0, 0)))
    assert not ok
    assert {rule for rule, _, _ in bad} == {"ll"}


def test_r_representation_condition():
    g = catalog.get("R", n=3).table
    good = RepresentationPair.scalar(g, {"x": -1}, {"x": 1})
    bad = RepresentationPair.scalar(g, {"x": 2}, {"x": 1})
    assert rep_check(good)[0] and not rep_check(bad)[0]


def test_coboundary_of_a_single_functional():
    rep = catalog.representation("R", (0, -3), 2)
    g = rep.g
    f = LinearHom(((F(0), F(1), F(0)),))  # picks the e2 coordinate
    df = coboundary(rep, f)
    # df(e2,x) = f([e2,x]) - r_x f(e2) = -2 + 3, and l_x = 0 kills df(x,e2)
    assert df.nonzero(g.basis_labels) == {("e1", "e1"): F(1), ("e2", "x"): F(1)}
    assert cocycle_check(rep, df)[0]


def test_reduce_mod_b2_kills_coboundaries():
    rep = catalog.representation("H", (0, 1, 0, 0))
    b2 = compute_B2(rep)
    w = b2.maps()[0].scaled(3)
    assert reduce_mod_B2(b2, w) == BilinearMap.zero(5)


@pytest.mark.parametrize("row", catalog.expectations()[:30], ids=lambda r: r.label)
def test_coboundaries_are_cocycles(row):
    rep = catalog.representation(row.algebra, row.point, row.n)
    z, b = compute_Z2(rep), compute_B2(rep)
    assert b.basis <= z.basis
    assert compute_H2(rep, z, b).dim == z.dim - b.dim


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), rats)
def test_r_line_of_representations(n, g1):
    # (g1, -g1) is always admissible; cohomology dims follow the three cases
    rep = catalog.representation("R", (g1, -g1), n)
    assert rep_check(rep)[0]
    z, b, h = dims(rep)
    assert z - b == h
    assert h >= 0 and b <= n + 1
