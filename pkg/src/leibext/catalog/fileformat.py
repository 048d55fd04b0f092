"""Reading and writing algebra files.

An algebra file is a UTF-8 JSON object::

    {
      "name": "NF3",
      "dim": 3,
      "basis": ["e1", "e2", "e3"],
      "products": [
        {"left": "e1", "right": "e1", "value": {"e2": "1"}},
        {"left": "e2", "right": "e1", "value": {"e3": "1"}}
      ]
    }

Coefficients are strings ``"p"`` or ``"p/q"`` with ``q > 0`` and the fraction
in lowest terms. Products that are not listed are zero, and listing the same
``(left, right)`` pair twice is an error. :func:`serialize_algebra` writes
products in basis order and is the exact inverse of :func:`parse_algebra`.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from ..algebra import AlgebraTable
from ..linalg import format_rational

_RATIONAL = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")


class AlgebraFormatError(ValueError):
    def __init__(self, kind: str, message: str, line: int | None = None, column: int | None = None):
        self.kind = kind
        self.detail = message
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{kind}{where}: {message}")


def parse_rational(text) -> Fraction:
    if not isinstance(text, str):
        raise AlgebraFormatError("non-rational coefficient", f"expected a string like \"p/q\", got {text!r}")
    m = _RATIONAL.match(text)
    if not m:
        raise AlgebraFormatError("non-rational coefficient", f"{text!r} is not of the form p or p/q with q > 0")
    sign, num, den = m.groups()
    if sign and num == "0":
        raise AlgebraFormatError("non-rational coefficient", f"{text!r}: write zero as \"0\"")
    q = Fraction(int(sign + num), int(den or 1))
    if den is not None and (q.denominator != int(den) or den == "1"):
        raise AlgebraFormatError("non-rational coefficient", f"{text!r} is not in lowest terms")
    return q


def _require(cond, kind, message):
    if not cond:
        raise AlgebraFormatError(kind, message)


def parse_algebra(text: str) -> AlgebraTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError("syntax error", exc.msg, exc.lineno, exc.colno) from None
    _require(isinstance(doc, dict), "schema error", "top level must be an object")
    missing = [k for k in ("name", "dim", "basis", "products") if k not in doc]
    _require(not missing, "schema error", f"missing field(s) {missing}")
    extra = sorted(set(doc) - {"name", "dim", "basis", "products"})
    _require(not extra, "schema error", f"unknown field(s) {extra}")
    name, dim, basis, products = doc["name"], doc["dim"], doc["basis"], doc["products"]
    _require(isinstance(name, str), "schema error", "name must be a string")
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim > 0, "schema error",
             "dim must be a positive integer")
    _require(isinstance(basis, list) and all(isinstance(b, str) and b for b in basis), "schema error",
             "basis must be a list of non-empty strings")
    _require(len(basis) == dim, "schema error", f"dim is {dim} but {len(basis)} basis labels are given")
    _require(len(set(basis)) == dim, "duplicate basis label", "basis labels must be distinct")
    _require(isinstance(products, list), "schema error", "products must be a list")
    labels = set(basis)
    table: dict = {}
    for pos, item in enumerate(products):
        where = f"products[{pos}]"
        _require(isinstance(item, dict) and set(item) == {"left", "right", "value"}, "schema error",
                 f"{where} must have exactly left, right and value")
        left, right, value = item["left"], item["right"], item["value"]
        for lab in (left, right):
            _require(lab in labels, "unknown basis label", f"{where}: {lab!r}")
        _require((left, right) not in table, "duplicate product", f"{where}: [{left},{right}] listed twice")
        _require(isinstance(value, dict), "schema error", f"{where}.value must be an object")
        coeffs = {}
        for lab, coef in value.items():
            _require(lab in labels, "unknown basis label", f"{where}.value: {lab!r}")
            try:
                coeffs[lab] = parse_rational(coef)
            except AlgebraFormatError as exc:
                raise AlgebraFormatError(exc.kind, f"{where}.value[{lab!r}]: {exc.detail}") from None
        table[(left, right)] = coeffs
    return AlgebraTable.from_products(basis, table, name)


def serialize_algebra(a: AlgebraTable) -> str:
    lab = a.basis_labels
    products = []
    for i in range(a.dim):
        for j in range(a.dim):
            v = a.c[i][j]
            if any(v):
                products.append({
                    "left": lab[i],
                    "right": lab[j],
                    "value": {lab[k]: format_rational(x) for k, x in enumerate(v) if x},
                })
    doc = {"name": a.name, "dim": a.dim, "basis": list(lab), "products": products}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def read_algebra(path) -> AlgebraTable:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def write_algebra(a: AlgebraTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_algebra(a))
