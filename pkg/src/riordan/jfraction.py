"""Jacobi continued fractions with polynomial level coefficients.

A fraction

    1 / (1 - a0*x - b1*x^2 / (1 - a1*x - b2*x^2 / (1 - ...)))

is stored as two :class:`IndexPoly` values: ``alpha`` gives the level
coefficients ``a_i`` for i >= 0 and ``beta`` gives the x^2 weights ``b_i``
for i >= 1, so ``b_1`` is the weight paired with level 0.  Both are
polynomials in the level index ``i`` whose coefficients are polynomials in
r and y; every fraction in this package is of that shape, and the
associahedron-to-permutahedron transfer map is closed on it.

Expansion is bottom-up with exact arithmetic: ``order//2 + 1`` levels
suffice because level j first contributes at x^(2j+2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .algebra import MultiPoly
from .series import TruncatedSeries

PolyLike = Union[int, Fraction, MultiPoly]


class ParseError(ValueError):
    """Malformed polynomial expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class IndexPoly:
    """Polynomial in the level index i with MultiPoly coefficients."""

    coeffs: tuple[MultiPoly, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[PolyLike]) -> IndexPoly:
        clean = [MultiPoly.coerce(c) for c in coeffs]
        while clean and not clean[-1]:
            clean.pop()
        return cls(tuple(clean))

    @classmethod
    def constant(cls, value: PolyLike) -> IndexPoly:
        return cls.from_coeffs([value])

    @classmethod
    def index(cls) -> IndexPoly:
        """The polynomial i itself."""
        return cls.from_coeffs([0, 1])

    def __call__(self, i: int) -> MultiPoly:
        acc = MultiPoly.const(0)
        for c in reversed(self.coeffs):
            acc = acc * i + c
        return acc

    def degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IndexPoly | PolyLike) -> IndexPoly:
        if not isinstance(other, IndexPoly):
            other = IndexPoly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        mine = self.coeffs + (MultiPoly.const(0),) * (n - len(self.coeffs))
        theirs = other.coeffs + (MultiPoly.const(0),) * (n - len(other.coeffs))
        return IndexPoly.from_coeffs([a + b for a, b in zip(mine, theirs)])

    __radd__ = __add__

    def __neg__(self) -> IndexPoly:
        return IndexPoly.from_coeffs([-c for c in self.coeffs])

    def __sub__(self, other: IndexPoly | PolyLike) -> IndexPoly:
        return self + (-other if isinstance(other, IndexPoly) else -MultiPoly.coerce(other))

    def __mul__(self, other: IndexPoly | PolyLike) -> IndexPoly:
        if not isinstance(other, IndexPoly):
            other = IndexPoly.constant(other)
        if self.is_zero() or other.is_zero():
            return IndexPoly(())
        out = [MultiPoly.const(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return IndexPoly.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IndexPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = IndexPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            mono = "" if power == 0 else ("i" if power == 1 else f"i^{power}")
            text = str(c)
            if mono:
                text = mono if text == "1" else (f"({text})*{mono}" if (" " in text or text.startswith("-")) else f"{text}*{mono}")
            pieces.append(text)
        return " + ".join(pieces)


@dataclass(frozen=True)
class JFraction:
    """Level coefficients alpha_i (i >= 0) and weights beta_i (i >= 1)."""

    alpha: IndexPoly
    beta: IndexPoly

    def expand(self, order: int, levels: int | None = None) -> TruncatedSeries:
        """Truncated expansion as a series in x over MultiPoly.

        Evaluated bottom-up: S_D = 1 and
        S_j = 1 / (1 - alpha(j) x - beta(j+1) x^2 S_{j+1}); returns S_0.
        The default depth order//2 + 1 is already exact at this order.
        """
        if order < 0:
            raise ValueError("order must be non-negative")
        depth = (order // 2 + 1) if levels is None else levels
        x = TruncatedSeries.x(order)
        x2 = x * x
        s = TruncatedSeries.one(order)
        for j in range(depth - 1, -1, -1):
            s = (1 - x * self.alpha(j) - x2 * self.beta(j + 1) * s).inverse()
        return s

    def binomial_shift(self, k: PolyLike) -> JFraction:
        """The k-th binomial transform: every alpha shifted by k."""
        return JFraction(self.alpha + MultiPoly.coerce(k), self.beta)

    def transfer(self) -> JFraction:
        """Scale level i's alpha by (i+1) and weight beta_i by i(i+1).

        On the displayed sequences this is (a0, a1, a2, ...; b1, b2, b3, ...)
        -> (a0, 2 a1, 3 a2, ...; 2 b1, 6 b2, 12 b3, ...), the map carrying
        the associahedron fraction triple onto the permutahedron one.
        """
        return JFraction(
            IndexPoly.from_coeffs([1, 1]) * self.alpha,
            IndexPoly.from_coeffs([0, 1, 1]) * self.beta,
        )


def binomial_transform(seq: Sequence, k: PolyLike) -> list:
    """b_n = sum_i C(n, i) k^(n-i) a_i, exactly, same length as the input."""
    k = MultiPoly.coerce(k)
    out = []
    for n in range(len(seq)):
        acc = MultiPoly.coerce(seq[n]) if isinstance(seq[n], (int, Fraction)) else seq[n]
        for i in range(n):
            acc = acc + comb(n, i) * (k ** (n - i)) * seq[i]
        out.append(acc)
    return out


# -- expression parsing -----------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([iry])|([()+\-*^/])|(\S)")


class _Parser:
    """Recursive descent over +, -, *, ^ and parentheses in i, r, y."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        for m in _TOKEN.finditer(text):
            if m.group(4):
                raise ParseError(f"unexpected character {m.group(4)!r}", m.start())
            kind = "int" if m.group(1) else ("var" if m.group(2) else "op")
            self.tokens.append((kind, m.group(0), m.start()))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> IndexPoly:
        value = self.expr()
        kind, text, where = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", where)
        return value

    def expr(self) -> IndexPoly:
        kind, text, _ = self.peek()
        negate = False
        if kind == "op" and text in "+-":
            self.take()
            negate = text == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                rhs = self.term()
                value = value - rhs if text == "-" else value + rhs
            else:
                return value

    def term(self) -> IndexPoly:
        value = self.power()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.take()
                value = value * self.power()
            elif kind in ("int", "var") or (kind == "op" and text == "("):
                # implicit product, e.g. "2y" or "i(i+1)"
                value = value * self.power()
            else:
                return value

    def power(self) -> IndexPoly:
        base = self.atom()
        kind, text, where = self.peek()
        if kind == "op" and text == "^":
            self.take()
            kind, text, where = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal", where)
            return base ** int(text)
        return base

    def atom(self) -> IndexPoly:
        kind, text, where = self.take()
        if kind == "int":
            value = Fraction(int(text))
            nxt_kind, nxt_text, _ = self.peek()
            if nxt_kind == "op" and nxt_text == "/":
                self.take()
                dkind, dtext, dwhere = self.take()
                if dkind != "int" or int(dtext) == 0:
                    raise ParseError("denominator must be a nonzero integer", dwhere)
                value /= int(dtext)
            return IndexPoly.constant(value)
        if kind == "var":
            if text == "i":
                return IndexPoly.index()
            return IndexPoly.constant(MultiPoly.var(text))
        if kind == "op" and text == "-":
            return -self.atom()
        if kind == "op" and text == "(":
            value = self.expr()
            kind, text, where = self.take()
            if not (kind == "op" and text == ")"):
                raise ParseError("expected ')'", where)
            return value
        raise ParseError(f"unexpected {text!r}" if text else "unexpected end of input", where)


def parse_index_poly(text: str) -> IndexPoly:
    """Parse a polynomial expression in i, r, y (e.g. ``i*r*y*(y+1)``)."""
    return _Parser(text).parse()


def parse_poly(text: str) -> MultiPoly:
    """Parse a polynomial in r, y only; the level index i is rejected."""
    value = parse_index_poly(text)
    if value.degree() > 0:
        raise ParseError("the index variable i is not allowed here", text.find("i"))
    return value.coeffs[0] if value.coeffs else MultiPoly.const(0)
