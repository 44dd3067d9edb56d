"""The two parameterized Pascal-like families and named polytope triples.

The ordinary family is (1/(1-x), x(1+rx)/(1-x)); the exponential family is
[e^x, x(1+rx/2)].  Both reduce to Pascal's triangle at r = 0 and both are
Pascal-like for every r.  Each family carries a triple of triangles:

* the h-matrix -- the family matrix itself,
* the f-matrix (face matrix) -- its product with the binomial matrix,
* the gamma-matrix -- defined row-wise by the expansion
  h_n(y) = sum_k gamma[n,k] y^k (1+y)^(n-2k) of the palindromic row
  polynomials.

Closed forms for all three of the ordinary family's triangles are provided
alongside the constructions so each route can check the other:

    gamma[n,k] = C(n-k, n-2k) r^k
    h[n,k]     = sum_j C(k,j) C(n-j, n-k-j) r^j
    f[n,k]     = sum_i sum_j C(i,j) C(n-j, n-i-j) r^j C(i,k)

Named triples for the simplex, hypercube, associahedron (type A) and
permutahedron expose the classical instances: the first two as explicit
Riordan constructions, the last two as Jacobi continued fractions whose
expansions hit well-known OEIS triangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Union

from .algebra import MultiPoly, R, Y
from .arrays import (
    Kind,
    LowerTriMatrix,
    RiordanArray,
    FACTORIAL_PAIR_WEIGHTS,
    binomial_array,
    face_matrix,
    triangle_from_series,
)
from .series import DEFAULT_ORDER, TruncatedSeries
from .jfraction import IndexPoly, JFraction

RValue = Union[int, MultiPoly]


class NotPalindromic(ValueError):
    """gamma extraction needs palindromic rows."""


@dataclass(frozen=True)
class FamilySpec:
    """Which family (ordinary/exponential) at which parameter value."""

    flavor: Kind = Kind.ORDINARY
    r: RValue = R

    def __post_init__(self):
        if self.flavor is Kind.GENERALIZED:
            raise ValueError("families come in ordinary and exponential flavors only")


@dataclass(frozen=True)
class GammaHFTriple:
    gamma: LowerTriMatrix
    h: LowerTriMatrix
    f: LowerTriMatrix


def family_array(spec: FamilySpec, order: int = DEFAULT_ORDER) -> RiordanArray:
    """The Riordan array of the family at the given truncation order."""
    r = spec.r
    if spec.flavor is Kind.ORDINARY:
        g = TruncatedSeries.ratio([1], [1, -1], order)
        f = TruncatedSeries.ratio([0, 1, r], [1, -1], order)
        return RiordanArray(g, f, Kind.ORDINARY)
    g = TruncatedSeries.x(order).exp()
    f = TruncatedSeries([0, 1, r * Fraction(1, 2)], order)
    return RiordanArray(g, f, Kind.EXPONENTIAL)


def h_matrix(spec: FamilySpec, size_n: int) -> LowerTriMatrix:
    return family_array(spec, max(size_n, DEFAULT_ORDER)).matrix(size_n)


def f_matrix(spec: FamilySpec, size_n: int) -> LowerTriMatrix:
    return face_matrix(h_matrix(spec, size_n))


def gamma_matrix(spec: FamilySpec, size_n: int) -> LowerTriMatrix:
    return gamma_from_h(h_matrix(spec, size_n))


def family_triple(spec: FamilySpec, size_n: int) -> GammaHFTriple:
    h = h_matrix(spec, size_n)
    return GammaHFTriple(gamma_from_h(h), h, face_matrix(h))


# -- closed forms (ordinary family) -----------------------------------------


def _binom(n: int, k: int) -> int:
    """C(n, k) with the usual vanishing convention outside 0 <= k <= n."""
    return comb(n, k) if 0 <= k <= n else 0


def gamma_closed(n: int, k: int, r: RValue = R) -> RValue:
    """C(n-k, n-2k) r^k; zero when 2k > n, matching the binomial convention."""
    if 2 * k > n:
        return 0
    return comb(n - k, n - 2 * k) * r**k


def h_closed(n: int, k: int, r: RValue = R) -> RValue:
    acc = 0
    for j in range(k + 1):
        acc = acc + _binom(k, j) * _binom(n - j, n - k - j) * r**j
    return acc


def f_closed(n: int, k: int, r: RValue = R) -> RValue:
    acc = 0
    for i in range(n + 1):
        cik = _binom(i, k)
        if cik == 0:
            continue
        inner = 0
        for j in range(i + 1):
            inner = inner + _binom(i, j) * _binom(n - j, n - i - j) * r**j
        acc = acc + inner * cik
    return acc


# -- gamma extraction --------------------------------------------------------


def gamma_from_h(h: LowerTriMatrix) -> LowerTriMatrix:
    """Solve h_n(y) = sum_k gamma[n,k] y^k (1+y)^(n-2k) row by row.

    The expansion basis is triangular in k, so the coefficients are unique;
    rows beyond k = n//2 are stored as zeros.  Raises NotPalindromic when a
    row fails the palindromy requirement.
    """
    rows = []
    for n, row in enumerate(h.rows):
        if any(row[k] != row[n - k] for k in range(n + 1)):
            raise NotPalindromic(f"row {n} is not palindromic: {row}")
        work = list(row)
        gamma = []
        for k in range(n // 2 + 1):
            c = work[k]
            gamma.append(c)
            for j in range(n - 2 * k + 1):
                work[k + j] = work[k + j] - c * comb(n - 2 * k, j)
        if any(bool(v) for v in work):  # pragma: no cover - palindromy forces this
            raise NotPalindromic(f"row {n} escaped the gamma basis: {row}")
        rows.append(gamma + [0] * (n + 1 - len(gamma)))
    return LowerTriMatrix(rows)


# -- generating-function chains ----------------------------------------------


def gf_chain(spec: FamilySpec, order: int = DEFAULT_ORDER):
    """The (gamma, h, f) generating functions of the family, reversed form.

    Ordinary flavor: three closed rational series,
    1/(1-x-ryx^2) -> 1/(1-(y+1)x-ryx^2) -> 1/(1-(2y+1)x-ry(y+1)x^2).
    Exponential flavor: three Jacobi fractions with the same alphas and
    level-proportional weights i*ry resp. i*ry(y+1).
    """
    r = MultiPoly.coerce(spec.r)
    if spec.flavor is Kind.ORDINARY:
        return (
            TruncatedSeries.ratio([1], [1, -1, -(r * Y)], order),
            TruncatedSeries.ratio([1], [1, -(Y + 1), -(r * Y)], order),
            TruncatedSeries.ratio([1], [1, -(2 * Y + 1), -(r * Y * (Y + 1))], order),
        )
    return (
        JFraction(IndexPoly.constant(1), IndexPoly.from_coeffs([0, r * Y])),
        JFraction(IndexPoly.constant(Y + 1), IndexPoly.from_coeffs([0, r * Y])),
        JFraction(IndexPoly.constant(2 * Y + 1), IndexPoly.from_coeffs([0, r * Y * (Y + 1)])),
    )


def plain_f_gf(spec: FamilySpec, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Un-reversed face GF of the ordinary family: 1/(1-(y+2)x-r(y+1)x^2)."""
    if spec.flavor is not Kind.ORDINARY:
        raise ValueError("the closed rational face GF is for the ordinary flavor")
    r = MultiPoly.coerce(spec.r)
    return TruncatedSeries.ratio([1], [1, -(Y + 2), -(r * (Y + 1))], order)


# -- named polytope triples ----------------------------------------------------


@dataclass(frozen=True)
class PolytopeTriple:
    """gamma/h/f data for a named polytope family.

    For the simplex and hypercube the h- and f-matrices come from explicit
    Riordan arrays; for the associahedron and permutahedron all three come
    from Jacobi continued fractions.  ``fixtures`` names the OEIS triangle
    that each component reproduces.
    """

    name: str
    fixtures: dict[str, str]
    gamma_fraction: JFraction | None = None
    h_fraction: JFraction | None = None
    f_fraction: JFraction | None = None
    h_array: RiordanArray | None = None
    f_array: RiordanArray | None = None

    def h_matrix(self, size_n: int) -> LowerTriMatrix:
        if self.h_fraction is not None:
            return triangle_from_series(self.h_fraction.expand(size_n))
        return self.h_array.matrix(size_n)

    def f_matrix(self, size_n: int) -> LowerTriMatrix:
        if self.f_fraction is not None:
            return triangle_from_series(self.f_fraction.expand(size_n))
        return self.f_array.matrix(size_n)

    def gamma_matrix(self, size_n: int) -> LowerTriMatrix:
        if self.gamma_fraction is not None:
            return triangle_from_series(self.gamma_fraction.expand(size_n))
        return gamma_from_h(self.h_matrix(size_n))


def named_triple(name: str, order: int = DEFAULT_ORDER) -> PolytopeTriple:
    """Triple for 'simplex', 'hypercube', 'associahedron' or 'permutahedron'."""
    if name == "simplex":
        return PolytopeTriple(
            name=name,
            fixtures={"f": "A135278", "f_reversed": "A074909"},
            h_array=RiordanArray(
                TruncatedSeries.ratio([1], [1, -1], order), TruncatedSeries.x(order)
            ),
            f_array=RiordanArray(
                TruncatedSeries.ratio([1], [1, -2, 1], order),
                TruncatedSeries.ratio([0, 1], [1, -1], order),
            ),
        )
    if name == "hypercube":
        b = binomial_array(Kind.ORDINARY, order)
        return PolytopeTriple(
            name=name,
            fixtures={"h": "A007318", "f": "A038207", "f_reversed": "A013609"},
            h_array=b,
            f_array=b * b,
        )
    if name == "associahedron":
        return PolytopeTriple(
            name=name,
            fixtures={"gamma": "A055151", "h": "A001263", "f": "A033282"},
            gamma_fraction=JFraction(IndexPoly.constant(1), IndexPoly.constant(Y)),
            h_fraction=JFraction(IndexPoly.constant(Y + 1), IndexPoly.constant(Y)),
            f_fraction=JFraction(
                IndexPoly.constant(2 * Y + 1), IndexPoly.constant(Y * (Y + 1))
            ),
        )
    if name == "permutahedron":
        return PolytopeTriple(
            name=name,
            fixtures={"gamma": "A101280", "h": "A008292", "f": "A019538"},
            gamma_fraction=JFraction(
                IndexPoly.from_coeffs([1, 1]), IndexPoly.from_coeffs([0, Y, Y])
            ),
            h_fraction=JFraction(
                IndexPoly.from_coeffs([Y + 1, Y + 1]), IndexPoly.from_coeffs([0, Y, Y])
            ),
            f_fraction=JFraction(
                IndexPoly.from_coeffs([2 * Y + 1, 2 * Y + 1]),
                IndexPoly.from_coeffs([0, Y * (Y + 1), Y * (Y + 1)]),
            ),
        )
    raise ValueError(f"unknown polytope family {name!r}")


POLYTOPE_NAMES = ("simplex", "hypercube", "associahedron", "permutahedron")


def narayana_array(order: int = DEFAULT_ORDER) -> RiordanArray:
    """The generalized array [sum_m x^m/(m!(m+1)!), x] with weights n!(n+1)!.

    Its matrix is the Narayana triangle N[n,k] = C(n,k) C(n+1,k) / (k+1).
    """
    g = TruncatedSeries(
        [Fraction(1, factorial(m) * factorial(m + 1)) for m in range(order + 1)]
    )
    return RiordanArray(g, TruncatedSeries.x(order), Kind.GENERALIZED, FACTORIAL_PAIR_WEIGHTS)


def narayana_closed(n: int, k: int) -> int:
    return comb(n, k) * comb(n + 1, k) // (k + 1)
