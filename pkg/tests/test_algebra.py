from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from riordan.algebra import MultiPoly, R, Y, as_fraction


def poly(text_terms):
    return MultiPoly(text_terms)


monomials = st.tuples(st.integers(0, 2), st.integers(0, 2))
small_polys = st.dictionaries(monomials, st.integers(-9, 9), max_size=5).map(MultiPoly)
assignments = st.fixed_dictionaries(
    {}, optional={"r": st.integers(-3, 3), "y": st.integers(-3, 3)}
)


def test_zero_coefficients_are_dropped():
    assert MultiPoly({(1, 0): 0, (0, 0): 3}) == 3
    assert not MultiPoly({(2, 1): 0})
    assert str(MultiPoly()) == "0"


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        MultiPoly({(-1, 0): 1})


def test_addition_examples():
    assert (R + 4) + (R + 4) == 2 * R + 8
    assert (Y + 1) + 0 == Y + 1
    lhs = 4 * Y**2 + 4 * Y + 1
    rhs = Y**2 + Y
    assert lhs + rhs == 5 * Y**2 + 5 * Y + 1


def test_multiplication_examples():
    assert (Y + 1) * (Y + 1) == Y**2 + 2 * Y + 1
    assert R * Y * (Y + 1) == R * Y**2 + R * Y
    assert (2 * Y + 1) ** 2 == 4 * Y**2 + 4 * Y + 1


def test_substitute_examples():
    assert (R**2 + 12 * R + 16).substitute(r=1) == 29
    assert (6 * R**2 + 32 * R + 32).substitute(r=0) == 32
    assert (R + 4).substitute(r=2) == 6


def test_partial_substitution_keeps_other_variable():
    p = R * Y**2 + 3 * Y + R
    assert p.substitute(r=2) == 2 * Y**2 + 3 * Y + 2
    assert p.substitute(y=1) == 2 * R + 3
    with pytest.raises(ValueError):
        p.substitute(x=1)


def test_rendering_is_canonical():
    assert str(3 * R**2 + 24 * R + 16) == "3*r^2 + 24*r + 16"
    assert str(R * Y**2 + 4 * Y**2 + R * Y + 4 * Y + 1) == "r*y^2 + 4*y^2 + r*y + 4*y + 1"
    assert str(-R + 1) == "-r + 1"
    assert str(Y - Y) == "0"
    assert str(MultiPoly({(1, 1): Fraction(-5, 2), (0, 0): 1})) == "-5/2*r*y + 1"


def test_inspection_helpers():
    p = R**2 * Y + 3 * Y + 7
    assert p.degree("r") == 2 and p.degree("y") == 1
    assert p.y_coefficient(1) == R**2 + 3
    assert p.y_coefficient(0) == 7
    assert p.coefficient(2, 1) == 1
    assert (2 * R).has_integer_coefficients()
    assert not (R * Fraction(1, 2)).has_integer_coefficients()
    assert as_fraction(MultiPoly.const(Fraction(3, 4))) == Fraction(3, 4)
    with pytest.raises(ValueError):
        (R + Y).constant_value()


def test_power_and_hash():
    assert R**0 == 1
    assert (R + Y) ** 3 == (R + Y) * (R + Y) * (R + Y)
    assert hash(R + Y) == hash(Y + R)
    with pytest.raises(ValueError):
        R ** (-1)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_polys, small_polys, assignments)
def test_substitution_is_a_homomorphism(a, b, sub):
    assert (a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub)
    assert (a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub)


@given(
    st.integers(-50, 50),
    st.integers(1, 40),
    st.integers(-50, 50),
    st.integers(1, 40),
)
def test_fractions_stay_reduced(a, b, c, d):
    from math import gcd

    total = Fraction(a, b) + Fraction(c, d)
    assert total.denominator > 0
    assert gcd(total.numerator, total.denominator) == 1
