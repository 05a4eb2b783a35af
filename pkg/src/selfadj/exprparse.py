"""Tiny parser for the catalog's coefficient templates.

Syntax: integers, identifiers (one letter plus optional digits), ``+ - * / ^``,
parentheses, and implicit multiplication (``2ab(x+1)``).  Templates are
evaluated to polynomials in ``x`` whose coefficients are exact rationals;
division is only allowed by constants and powers must be nonnegative
integer constants.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .algebra import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\d*)|(\S))")


class TemplateError(ValueError):
    pass


def tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif ident is not None:
            out.append(("id", ident))
        elif op is not None:
            if op not in "+-*/^()":
                raise TemplateError(f"unexpected character {op!r} in {text!r}")
            out.append(("op", op))
    return out


# AST nodes are tuples: ("num", Fraction) | ("var", name) | (op, left, right) | ("neg", e)


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            raise TemplateError(f"expected {value!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.i != len(self.toks):
            raise TemplateError(f"trailing input at token {self.peek()}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = (op, node, self.term())
        return node

    def starts_factor(self):
        kind, val = self.peek()
        return kind in ("num", "id") or (kind == "op" and val == "(")

    def term(self):
        node = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                node = (val, node, self.unary())
            elif self.starts_factor():
                node = ("*", node, self.power())
            else:
                return node

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return ("neg", self.unary())
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            if self.peek() == ("op", "-"):
                self.take()
                exp = ("neg", self.atom())
            else:
                exp = self.atom()
            return ("^", base, exp)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return ("num", Fraction(int(val)))
        if kind == "id":
            return ("var", val)
        if (kind, val) == ("op", "("):
            node = self.expr()
            self.take(")")
            return node
        raise TemplateError(f"unexpected token {val!r}")


@lru_cache(maxsize=None)
def parse(text: str):
    return _Parser(tokenize(text)).parse()


def free_names(text: str) -> set[str]:
    out: set[str] = set()

    def walk(node):
        if node[0] == "var":
            out.add(node[1])
        elif node[0] == "num":
            return
        else:
            for child in node[1:]:
                walk(child)

    walk(parse(text))
    return out


def _const(p: Poly) -> Fraction:
    if not p.is_constant():
        raise TemplateError(f"expected a constant, got {p}")
    return p.coeff(0)


def evaluate(text: str, env: Mapping[str, object],
             resolve: Callable[[str], Poly] | None = None) -> Poly:
    """Evaluate a template.  ``env`` maps names to Fraction/int/Poly; ``resolve`` handles the rest."""

    def ev(node) -> Poly:
        tag = node[0]
        if tag == "num":
            return Poly.constant(node[1])
        if tag == "var":
            name = node[1]
            if name in env:
                v = env[name]
                return v if isinstance(v, Poly) else Poly.constant(v)
            if resolve is not None:
                return resolve(name)
            raise TemplateError(f"unbound name {name!r}")
        if tag == "neg":
            return -ev(node[1])
        left, right = ev(node[1]), ev(node[2])
        if tag == "+":
            return left + right
        if tag == "-":
            return left - right
        if tag == "*":
            return left * right
        if tag == "/":
            d = _const(right)
            if not d:
                raise ZeroDivisionError("template divides by zero")
            return left / d
        if tag == "^":
            e = _const(right)
            if e.denominator != 1 or e < 0:
                raise TemplateError(f"non-integer or negative power {e}")
            return left ** int(e)
        raise TemplateError(f"bad node {tag}")

    return ev(parse(text))


def evaluate_scalar(text: str, env: Mapping[str, object]) -> Fraction:
    return _const(evaluate(text, env))


_CMP = re.compile(r"(<=|>=|!=|==|<|>|=)")


def check_constraint(text: str, env: Mapping[str, object]) -> bool:
    """Evaluate a chain of comparisons such as ``-c < d < c`` or ``m2 != 0``."""
    parts = _CMP.split(text)
    if len(parts) < 3:
        raise TemplateError(f"not a comparison: {text!r}")
    values = [evaluate_scalar(p, env) for p in parts[0::2]]
    ops = parts[1::2]
    for lhs, op, rhs in zip(values, ops, values[1:]):
        ok = {
            "<": lhs < rhs, ">": lhs > rhs, "<=": lhs <= rhs, ">=": lhs >= rhs,
            "!=": lhs != rhs, "==": lhs == rhs, "=": lhs == rhs,
        }[op]
        if not ok:
            return False
    return True
