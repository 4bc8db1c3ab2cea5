"""Text grammar for field descriptors, field elements and polynomials.

Descriptors::

    field := "GF(2)" | field "[" ident "]" "/" "(" poly ")"
           | "(" field ")" "(" ident ")" | field "(" ident ")"

Elements and polynomials are sums of products of integers, generator names
and parenthesized subexpressions, with ``^`` for non-negative integer powers
and ``/`` for division (by constants only, for polynomials).  ``-`` is
accepted and means ``+``.
"""

from __future__ import annotations

import re

from ..errors import ParseError, UnsupportedFieldError
from .tower import GF2, AlgebraicLayer, RationalFunctionField
from .unipoly import UniPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, ident, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif ident is not None:
            out.append(("ident", ident))
        else:
            if sym not in "+-*/^()":
                raise ParseError(f"unexpected character {sym!r} in {text!r}")
            out.append((sym, sym))
        pos = m.end()
    return out


class _ExprParser:
    def __init__(self, text, algebra):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.alg = algebra

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg):
        raise ParseError(f"{msg} in {self.text!r}")

    def parse(self):
        if not self.toks:
            self.fail("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            self.fail(f"unexpected {self.toks[self.i][1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            self.take()
            v = self.alg.add(v, self.term())
        return v

    def term(self):
        v = self.power()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            w = self.power()
            v = self.alg.mul(v, w) if op == "*" else self.alg.div(v, w)
        return v

    def power(self):
        v = self.unary()
        if self.peek() == "^":
            self.take()
            if self.peek() != "int":
                self.fail("exponent must be a non-negative integer")
            v = self.alg.pow(v, self.take()[1])
        return v

    def unary(self):
        if self.peek() in ("+", "-"):
            self.take()
            return self.unary()
        return self.atom()

    def atom(self):
        kind = self.peek()
        if kind is None:
            self.fail("unexpected end of input")
        kind, val = self.take()
        if kind == "int":
            return self.alg.const(val)
        if kind == "ident":
            return self.alg.var(val)
        if kind == "(":
            v = self.expr()
            if self.peek() != ")":
                self.fail("missing ')'")
            self.take()
            return v
        self.fail(f"unexpected {val!r}")


class _FieldAlgebra:
    def __init__(self, field):
        self.field = field
        self.names = field.gens()

    def const(self, n):
        return self.field(n)

    def var(self, name):
        try:
            return self.names[name]
        except KeyError:
            raise ParseError(f"unknown generator {name!r} for {self.field}") from None

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if not b:
            raise ParseError("division by zero")
        return a / b

    def pow(self, a, k):
        return a ** k


class _PolyAlgebra(_FieldAlgebra):
    def __init__(self, field, var):
        super().__init__(field)
        if var in self.names:
            raise ParseError(f"polynomial variable {var!r} clashes with a generator of {field}")
        self.x = var

    def const(self, n):
        return UniPoly.constant(self.field, n, self.x)

    def var(self, name):
        if name == self.x:
            return UniPoly.gen(self.field, self.x)
        return UniPoly.constant(self.field, super().var(name), self.x)

    def div(self, a, b):
        if b.degree != 0:
            raise ParseError("polynomials may only be divided by nonzero constants")
        return a / b.lc


def parse_element(field, text):
    return _ExprParser(text, _FieldAlgebra(field)).parse()


def parse_poly(field, text, var="x"):
    return _ExprParser(text, _PolyAlgebra(field, var)).parse()


def _matching(s, start):
    depth = 0
    for i in range(start, len(s)):
        if s[i] == "(":
            depth += 1
        elif s[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise ParseError(f"unbalanced parentheses in {s!r}")


def parse_field(text):
    """Parse a descriptor such as ``(GF(2)[a]/(a^2+a+1))(t)``."""
    s = text.strip()
    if s.startswith("GF(2)"):
        F = GF2()
        rest = s[5:]
    elif s.startswith("("):
        j = _matching(s, 0)
        F = parse_field(s[1:j])
        rest = s[j + 1:]
    else:
        raise ParseError(f"descriptor must start with 'GF(2)' or '(': {text!r}")

    while True:
        rest = rest.strip()
        if not rest:
            return F
        if rest.startswith("["):
            j = rest.find("]")
            if j < 0:
                raise ParseError(f"missing ']' in {text!r}")
            name = _check_name(F, rest[1:j].strip())
            rest = rest[j + 1:].lstrip()
            if not rest.startswith("/"):
                raise ParseError(f"expected '/' after generator {name!r}")
            rest = rest[1:].lstrip()
            if not rest.startswith("("):
                raise ParseError(f"expected '(' before the modulus of {name!r}")
            k = _matching(rest, 0)
            if F.is_function_field:
                raise UnsupportedFieldError(
                    "algebraic layers above the transcendental layer are not supported"
                )
            modulus = parse_poly(F, rest[1:k], name)
            F = AlgebraicLayer(F, name, modulus)
            rest = rest[k + 1:]
        elif rest.startswith("("):
            k = _matching(rest, 0)
            name = _check_name(F, rest[1:k].strip())
            if F.is_function_field:
                raise UnsupportedFieldError("at most one transcendental layer is supported")
            F = RationalFunctionField(F, name)
            rest = rest[k + 1:]
        else:
            raise ParseError(f"unexpected {rest!r} in descriptor {text!r}")


def _check_name(F, name):
    if not _IDENT.match(name):
        raise ParseError(f"invalid generator name {name!r}")
    if name in F.gens():
        raise ParseError(f"generator name {name!r} is already used")
    return name
