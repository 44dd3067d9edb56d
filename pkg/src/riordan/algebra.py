"""Exact coefficient arithmetic: integers, rationals, and polynomials in r, y.

Three coefficient domains are used throughout the package:

* plain ``int`` (Python integers are already arbitrary precision),
* ``fractions.Fraction`` for rational intermediate values (always reduced,
  denominator positive -- the stdlib guarantees both),
* :class:`MultiPoly`, a sparse polynomial in the two parameters ``r`` and
  ``y`` with ``Fraction`` coefficients.

``r`` is the parameter of the two triangle families and ``y`` marks the
column index in bivariate generating functions, so the variable universe is
fixed to exactly ``{r, y}``.  A :class:`MultiPoly` maps exponent pairs
``(i, j)`` (standing for ``r**i * y**j``) to nonzero coefficients; the zero
polynomial is the empty map.  Instances are immutable and canonical, hence
``==`` is coefficient-wise equality and the text rendering is deterministic:
terms are ordered by total degree, then y-degree, then r-degree, all
descending (graded order with r below y).

Values of the three domains mix freely in arithmetic; ``int`` and
``Fraction`` coerce into :class:`MultiPoly` on contact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

VARIABLES = ("r", "y")

Scalar = Union[int, Fraction]
Monomial = tuple[int, int]  # (power of r, power of y)


def as_fraction(value: Scalar | "MultiPoly") -> Fraction:
    """Coerce an exact scalar (or constant polynomial) to a Fraction."""
    if isinstance(value, MultiPoly):
        return value.constant_value()
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


class MultiPoly:
    """Immutable sparse polynomial in r and y over the rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean

    @classmethod
    def const(cls, value: Scalar) -> MultiPoly:
        return cls({(0, 0): value})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        if name == "r":
            return cls({(1, 0): 1})
        if name == "y":
            return cls({(0, 1): 1})
        raise ValueError(f"unknown variable {name!r}; universe is {VARIABLES}")

    @classmethod
    def coerce(cls, value: Scalar | MultiPoly) -> MultiPoly:
        return value if isinstance(value, MultiPoly) else cls.const(value)

    # -- inspection ------------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, rpow: int = 0, ypow: int = 0) -> Fraction:
        return self._terms.get((rpow, ypow), Fraction(0))

    def y_coefficient(self, k: int) -> MultiPoly:
        """The coefficient of y**k, as a polynomial in r."""
        return MultiPoly({(i, 0): c for (i, j), c in self._terms.items() if j == k})

    def degree(self, name: str) -> int:
        """Largest exponent of the named variable (0 for the zero polynomial)."""
        pos = VARIABLES.index(name)
        return max((m[pos] for m in self._terms), default=0)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms.get((0, 0), Fraction(0))

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def substitute(self, values: Mapping[str, Scalar] | None = None, **named: Scalar) -> MultiPoly:
        """Substitute exact values for r and/or y; unassigned variables remain."""
        assign = dict(values or {})
        assign.update(named)
        unknown = set(assign) - set(VARIABLES)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        out: dict[Monomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            if "r" in assign:
                c *= Fraction(assign["r"]) ** i
                i = 0
            if "y" in assign:
                c *= Fraction(assign["y"]) ** j
                j = 0
            key = (i, j)
            out[key] = out.get(key, Fraction(0)) + c
        return MultiPoly(out)

    # -- ring operations -------------------------------------------------

    def __add__(self, other: Scalar | MultiPoly) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Scalar | MultiPoly) -> MultiPoly:
        return self + (-other if isinstance(other, MultiPoly) else -Fraction(other))

    def __rsub__(self, other: Scalar) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other: Scalar | MultiPoly) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            return MultiPoly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.const(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(
            self._terms.items(),
            key=lambda item: (item[0][0] + item[0][1], item[0][1], item[0][0]),
            reverse=True,
        )
        pieces: list[str] = []
        for idx, ((i, j), c) in enumerate(ordered):
            body = _render_term(i, j, abs(c))
            if idx == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _render_term(i: int, j: int, coeff: Fraction) -> str:
    factors = []
    if i:
        factors.append("r" if i == 1 else f"r^{i}")
    if j:
        factors.append("y" if j == 1 else f"y^{j}")
    if not factors:
        return str(coeff)
    if coeff != 1:
        factors.insert(0, str(coeff))
    return "*".join(factors)


R = MultiPoly.var("r")
Y = MultiPoly.var("y")
