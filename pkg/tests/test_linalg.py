from __future__ import annotations

from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from leibext.linalg import (
    SubspaceBasis,
    determinant,
    format_rational,
    identity,
    inverse,
    matmul,
    matvec,
    nullspace,
    rank,
    rref,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


def test_rref_small_oracle():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rref(rows, 3) == [(F(1), F(0), F(1)), (F(0), F(1), F(1))]
    assert rank(rows, 3) == 2
    assert nullspace(rows, 3) == [(F(-1), F(-1), F(1))]


def test_inverse_and_determinant():
    a = [[F(2), F(1)], [F(1), F(1)]]
    assert determinant(a) == 1
    assert matmul(a, inverse(a)) == identity(2)


def test_format_rational():
    assert format_rational(F(-3, 4)) == "-3/4"
    assert format_rational(F(5)) == "5"


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    ncols = len(m[0])
    ns = nullspace(m, ncols)
    assert rank(m, ncols) + len(ns) == ncols
    for v in ns:
        assert all(x == 0 for x in matvec(m, v))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_span_is_canonical(m, scales):
    # rescaling and reordering generators does not change the stored basis
    n = len(m[0])
    other = [[x * (scales[i % 4] or 1) for x in row] for i, row in enumerate(reversed(m))]
    assert SubspaceBasis.span(n, m) == SubspaceBasis.span(n, other)


@settings(max_examples=40, deadline=None)
@given(matrices(cols=st.just(4)), matrices(cols=st.just(4)))
def test_intersection_and_sum_dimensions(a, b):
    s, t = SubspaceBasis.span(4, a), SubspaceBasis.span(4, b)
    assert (s + t).dim + s.intersection(t).dim == s.dim + t.dim
    assert s.intersection(t) <= s and s <= s + t
