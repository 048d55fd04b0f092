from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibext import catalog
from leibext.algebra import AlgebraTable, leibniz_check
from leibext.catalog.fileformat import (
    AlgebraFormatError,
    parse_algebra,
    parse_rational,
    read_algebra,
    serialize_algebra,
    write_algebra,
)
from leibext.catalog.tables import classified_table


def test_parameter_errors():
    with pytest.raises(ValueError):
        catalog.get("NF")
    with pytest.raises(ValueError):
        catalog.get("R", n=1)
    with pytest.raises(ValueError):
        catalog.get("H", n=3)
    with pytest.raises(KeyError):
        catalog.get("Q")


def test_r_hat_relabeling():
    e = catalog.get("R_hat", n=3)
    assert e.source_order().basis_labels == ("x", "e1", "e2", "e3", "e4")
    assert e.table.basis_labels == ("e1", "e2", "e3", "x", "e4")


def test_family_parameter():
    a = catalog.get("H_hat_5", delta=2).table
    b = catalog.get("H_hat_5", delta=3).table
    assert a != b and leibniz_check(a)[0]


def test_printed_errata_fail_and_repairs_pass():
    for name in ("H_hat_3", "L2_hat_4"):
        c = catalog.CLASSIFIED_BY_NAME[name]
        d = 1 if c.family else None
        assert not leibniz_check(classified_table(name, d, printed=True))[0]
        assert leibniz_check(classified_table(name, d))[0]


def test_expectation_rows_cover_every_case():
    rows = catalog.expectations()
    assert len({(r.algebra, r.case, r.n) for r in rows}) == len(catalog.all_cases())
    assert sum(r.algebra == "H" for r in rows) == 13


@pytest.mark.parametrize("text,value", [("0", F(0)), ("-3/4", F(-3, 4)), ("12", F(12))])
def test_rationals(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "2/4", "3/1", "-0", "1.5", "+1", " 1"])
def test_bad_rationals(text):
    with pytest.raises(AlgebraFormatError) as err:
        parse_rational(text)
    assert err.value.kind == "non-rational coefficient"


def _doc(products, basis='["e1","e2"]', dim=2):
    return '{"name":"a","dim":%d,"basis":%s,"products":[%s]}' % (dim, basis, products)


@pytest.mark.parametrize("text,kind", [
    ('{"name": "a",\n "dim": 2,,}', "syntax error"),
    (_doc('{"left":"e1","right":"e3","value":{}}'), "unknown basis label"),
    (_doc('{"left":"e1","right":"e1","value":{"e9":"1"}}'), "unknown basis label"),
    (_doc('{"left":"e1","right":"e1","value":{}},{"left":"e1","right":"e1","value":{}}'), "duplicate product"),
    (_doc("", basis='["e1","e1"]'), "duplicate basis label"),
    (_doc("", dim=3), "schema error"),
    ('{"name":"a"}', "schema error"),
])
def test_format_errors(text, kind):
    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra(text)
    assert err.value.kind == kind


def test_syntax_error_position():
    with pytest.raises(AlgebraFormatError) as err:
        parse_algebra('{"name": "a",\n "dim": 2,,}')
    assert (err.value.line, err.value.column) == (2, 11)


def test_every_catalog_entry_round_trips(tmp_path):
    for e in catalog.all_entries():
        text = serialize_algebra(e.table)
        assert parse_algebra(text) == e.table
    path = tmp_path / "h.json"
    write_algebra(catalog.get("H").table, path)
    assert read_algebra(path) == catalog.get("H").table


coef = st.fractions(min_value=-9, max_value=9, max_denominator=7)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, n - 1), coef),
                         max_size=8))))
def test_random_tables_round_trip(data):
    n, entries = data
    labels = [f"v{i}" for i in range(n)]
    prods: dict = {}
    for i, j, k, c in entries:
        prods.setdefault((labels[i], labels[j]), {})[labels[k]] = c
    a = AlgebraTable.from_products(labels, prods, "rand")
    text = serialize_algebra(a)
    assert parse_algebra(text) == a
    assert serialize_algebra(parse_algebra(text)) == text
