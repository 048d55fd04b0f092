from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibext import catalog
from leibext.algebra import AlgebraTable, leibniz_check, span_of_labels
from leibext.cohomology import BilinearMap, RepresentationPair, compute_H2
from leibext.extension import (
    ExtensionSpec,
    abelian_module,
    abelian_validity,
    build_extension,
    g_omega0,
    nilradical_lemma_check,
    validity_check,
)
from leibext.harness import classified_spec, r_theorem_spec


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_r_extension_matches_the_stored_table(n):
    s = r_theorem_spec(n)
    assert validity_check(s)[0]
    assert build_extension(s) == catalog.get("R_hat", n=n).table


def test_zero_cocycle_gives_a_direct_sum():
    g = catalog.get("R", n=2).table
    rep = catalog.representation("R", (0, -3), 2)
    ext = build_extension(ExtensionSpec(g, abelian_module(["e3"]), rep, BilinearMap.zero(3)))
    assert ext.products() == {**g.products(), ("e3", "x"): {"e3": F(-3)}}


def test_invalid_cocycle_is_reported():
    g = catalog.get("R", n=2).table
    rep = catalog.representation("R", (0, -3), 2)
    w = BilinearMap.from_values(g, 1, {("e1", "e1"): 1})
    ok, fails = validity_check(ExtensionSpec(g, abelian_module(["e3"]), rep, w))
    assert not ok and fails[0][0] == "cocycle"


def test_abelian_validity_matches_full_check():
    s = classified_spec("H_hat_3")
    assert abelian_validity(s) == validity_check(s)[0] is True


def test_lemma_report_for_the_r_extension():
    s = r_theorem_spec(4)
    rpt = nilradical_lemma_check(s, catalog.get("R", n=4).nilradical)
    assert rpt.in_kernel and rpt.nilradical.ok and rpt.center_is_h and rpt.solvable
    # omega(N, e4) = 0 although omega(e4, e1) != 0, so the one-sided G contains e4
    g = g_omega0(s, catalog.get("R", n=4).nilradical)
    assert g == span_of_labels(s.g, ["e2", "e3", "e4"])
    assert not rpt.criterion and rpt.lemma_violation
    assert rpt.criterion_two_sided and not rpt.two_sided_violation


def _random_spec(rng):
    g = AlgebraTable.from_products(["g0", "g1"], {("g1", "g0"): {"g1": 1}})
    h = AlgebraTable.from_products(["a1", "a2"], {("a1", "a1"): {"a2": 1}})
    pick = lambda: F(rng.choice([0, 0, 0, 1, -1]))  # noqa: E731
    mats = lambda: tuple(tuple(tuple(pick() for _ in range(2)) for _ in range(2)) for _ in range(2))  # noqa: E731
    w = BilinearMap(2, 2, tuple(F(rng.choice([0, 0, 1, -1, 2])) for _ in range(8)))
    return ExtensionSpec(g, h, RepresentationPair(g, 2, mats(), mats()), w)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_identities_agree_with_built_table_nonabelian(seed):
    s = _random_spec(random.Random(seed))
    assert validity_check(s)[0] == leibniz_check(build_extension(s))[0]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(catalog.expectations()), st.integers(0, 10**6))
def test_identities_agree_with_built_table_abelian(row, seed):
    rep = catalog.representation(row.algebra, row.point, row.n)
    rng = random.Random(seed)
    h2 = compute_H2(rep)
    w = BilinearMap.zero(rep.g.dim)
    for r in h2.representatives:
        w = w + r.scaled(rng.choice([0, 1, -2]))
    if rng.random() < 0.5:  # break it
        coords = list(w.coords)
        coords[rng.randrange(len(coords))] += 1
        w = BilinearMap(rep.g.dim, 1, tuple(coords))
    s = ExtensionSpec(rep.g, abelian_module(["h"]), rep, w)
    assert validity_check(s)[0] == leibniz_check(build_extension(s))[0]
