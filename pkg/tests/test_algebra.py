from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibext import catalog
from leibext.algebra import (
    AlgebraTable,
    center,
    derivation_dim,
    fingerprint,
    is_ideal,
    leibniz_check,
    lower_central_series,
    span_of_labels,
    verify_nilradical,
)
from leibext.linalg import SubspaceBasis


def test_null_filiform_series():
    a = catalog.get("NF", n=5).table
    assert [s.dim for s in lower_central_series(a)] == [5, 4, 3, 2, 1, 0]
    assert center(a) == span_of_labels(a, ["e5"])


def test_h_table_and_its_alternative_reading():
    assert leibniz_check(catalog.get("H").table)[0]
    ok, bad = leibniz_check(catalog.h_alternative())
    assert not ok and bad


def test_leibniz_detects_a_broken_table():
    a = AlgebraTable.from_products(["a", "b", "c"], {("a", "b"): {"c": 1}, ("c", "a"): {"b": 1}})
    assert not leibniz_check(a)[0]


def test_nilradical_of_r():
    e = catalog.get("R", n=3)
    v = verify_nilradical(e.table, e.nilradical)
    assert v.ok
    wrong = span_of_labels(e.table, ["e1", "e2"])
    assert not verify_nilradical(e.table, wrong).ok


def test_nilradical_must_be_an_ideal():
    e = catalog.get("H")
    assert is_ideal(e.table, e.nilradical)
    assert not verify_nilradical(e.table, SubspaceBasis.full(5)).ok


def test_derivations_of_abelian():
    assert derivation_dim(AlgebraTable.abelian(3)) == 9


@pytest.mark.parametrize("name", ["H", "L1", "L2", "L3", "H_hat_6", "L3_hat_8"])
def test_fingerprint_invariant_under_relabeling(name):
    a = catalog.get(name).table
    rng = random.Random(name)
    fp = fingerprint(a)
    for _ in range(3):
        perm = list(range(a.dim))
        rng.shuffle(perm)
        assert fingerprint(a.permuted(perm)) == fp


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 6), st.permutations(range(7)))
def test_permuting_preserves_leibniz(n, perm):
    a = catalog.get("R", n=n).table
    p = [i for i in perm if i < a.dim]
    assert leibniz_check(a.permuted(p))[0]
    assert a.permuted(p).permuted([p.index(i) for i in range(a.dim)]) == a
