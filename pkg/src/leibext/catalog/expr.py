"""Evaluate small coefficient expressions such as ``-(1+al1)*b14`` exactly.

Only numbers, names, ``+ - * /`` and parentheses are accepted.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Mapping

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def evaluate(text: str, env: Mapping[str, object]) -> Fraction:
    return _eval(ast.parse(text.strip(), mode="eval").body, env)


def _eval(node, env):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        try:
            return Fraction(env[node.id])
        except KeyError:
            raise KeyError(f"unbound name {node.id!r}") from None
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, env)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    raise ValueError(f"unsupported expression: {ast.dump(node)}")


def linear_terms(text: str, params: list[str], env: Mapping[str, object]) -> dict[str, Fraction]:
    """Split an expression linear in ``params`` into ``{param: coefficient}``."""
    out = {}
    base = {**env, **{p: 0 for p in params}}
    for p in params:
        c = evaluate(text, {**base, p: 1})
        if c:
            out[p] = c
    if evaluate(text, base):
        raise ValueError(f"{text!r} has a constant term")
    return out
