from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from riordan.algebra import MultiPoly, R, Y
from riordan.jfraction import (
    IndexPoly,
    JFraction,
    ParseError,
    binomial_transform,
    parse_index_poly,
    parse_poly,
)
from riordan.series import integer_coeffs


def J(alpha, beta):
    return JFraction(alpha, beta)


def test_expand_examples():
    aerated = J(IndexPoly.constant(0), IndexPoly.index()).expand(7)
    assert integer_coeffs(aerated) == [1, 0, 1, 0, 3, 0, 15, 0]

    weighted = J(IndexPoly.constant(2 * Y + 1), IndexPoly.from_coeffs([0, R * Y * (Y + 1)]))
    c2 = weighted.expand(2)[2]
    assert c2 == 4 * Y**2 + 4 * Y + 1 + R * Y * (Y + 1)
    assert c2.substitute(r=1) == 1 + 5 * Y + 5 * Y**2

    trivial = J(IndexPoly.constant(0), IndexPoly.constant(0))
    assert trivial.expand(6) == 1


def test_binomial_shift_examples():
    frac = J(IndexPoly.constant(1), IndexPoly.from_coeffs([0, R * Y]))
    shifted = frac.binomial_shift(Y)
    assert shifted.alpha == IndexPoly.constant(Y + 1)
    assert shifted.beta == frac.beta

    assert frac.binomial_shift(0) == frac

    twice = J(IndexPoly.constant(0), IndexPoly.index()).binomial_shift(2)
    assert integer_coeffs(twice.expand(4)) == [1, 2, 5, 14, 43]


def test_binomial_transform_examples():
    assert binomial_transform([1, 0, 0, 0], 1) == [1, 1, 1, 1]
    assert binomial_transform([1, 0, 1, 0, 3], 1) == [1, 1, 2, 4, 10]
    data = [5, -1, 7, MultiPoly.const(3)]
    assert binomial_transform(data, 0) == data


def test_transfer_examples():
    assoc_gamma = J(IndexPoly.constant(1), IndexPoly.constant(Y))
    perm_gamma = assoc_gamma.transfer()
    assert perm_gamma.alpha == IndexPoly.from_coeffs([1, 1])
    assert perm_gamma.beta == IndexPoly.from_coeffs([0, Y, Y])
    assert [perm_gamma.beta(i) for i in (1, 2, 3)] == [2 * Y, 6 * Y, 12 * Y]

    assoc_h = J(IndexPoly.constant(Y + 1), IndexPoly.constant(Y))
    perm_h = assoc_h.transfer()
    assert [perm_h.alpha(i) for i in (0, 1, 2)] == [Y + 1, 2 * (Y + 1), 3 * (Y + 1)]
    assert [perm_h.beta(i) for i in (1, 2, 3)] == [2 * Y, 6 * Y, 12 * Y]

    zero = J(IndexPoly.constant(0), IndexPoly.constant(0))
    assert zero.transfer() == zero


def test_transfer_scales_levels_pointwise():
    frac = J(IndexPoly.from_coeffs([1, Y]), IndexPoly.from_coeffs([R, 0, 2]))
    moved = frac.transfer()
    for i in range(6):
        assert moved.alpha(i) == (i + 1) * frac.alpha(i)
        assert moved.beta(i) == i * (i + 1) * frac.beta(i)


index_polys = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(0, 2)), min_size=1, max_size=3
).map(lambda cs: IndexPoly.from_coeffs([c + y_deg * Y for c, y_deg in cs]))


@given(index_polys, index_polys, st.sampled_from([1, 2, Y, Y + 1]))
def test_shift_law_matches_sequence_transform(alpha, beta, k):
    frac = J(alpha, beta)
    shifted = frac.binomial_shift(k).expand(8).coeffs
    transformed = binomial_transform(frac.expand(8).coeffs, k)
    assert all(a == b for a, b in zip(shifted, transformed))


@given(index_polys, index_polys)
def test_depth_sufficiency(alpha, beta):
    frac = J(alpha, beta)
    assert frac.expand(12) == frac.expand(12, levels=12 // 2 + 3)


def test_index_poly_arithmetic():
    i = IndexPoly.index()
    assert (i + 1) * i == IndexPoly.from_coeffs([0, 1, 1])
    assert (i + 1) ** 2 == i * i + 2 * i + 1
    assert i - i == IndexPoly.from_coeffs([])
    assert IndexPoly.from_coeffs([1, 0, 0]) == IndexPoly.constant(1)
    assert i(5) == 5 and (i * i + 1)(3) == 10


def test_parse_examples():
    assert parse_index_poly("2*y+1") == IndexPoly.constant(2 * Y + 1)
    assert parse_index_poly("i*r*y*(y+1)") == IndexPoly.from_coeffs([0, R * Y * (Y + 1)])
    assert parse_index_poly("i^2 + 3*i") == IndexPoly.from_coeffs([0, 3, 1])
    assert parse_index_poly("-y + 1") == IndexPoly.constant(1 - Y)
    assert parse_index_poly("1/2*r") == IndexPoly.constant(R * Fraction(1, 2))
    assert parse_index_poly("2y") == IndexPoly.constant(2 * Y)  # implicit product
    assert parse_index_poly("i(i+1)") == IndexPoly.from_coeffs([0, 1, 1])


def test_parse_round_trip_through_rendering():
    for expr in ("2*y+1", "i*r*y*(y+1)", "(y+1)*i + y + 1", "i^2 - 4"):
        value = parse_index_poly(expr)
        assert parse_index_poly(str(value)) == value


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_index_poly("2*y+")
    assert err.value.position == 4
    with pytest.raises(ParseError):
        parse_index_poly("(y")
    with pytest.raises(ParseError):
        parse_index_poly("z + 1")
    with pytest.raises(ParseError):
        parse_index_poly("i^y")
    with pytest.raises(ParseError):
        parse_index_poly("1/0")


def test_parse_poly_rejects_the_index_variable():
    assert parse_poly("r*y + 3") == R * Y + 3
    with pytest.raises(ParseError):
        parse_poly("i + 1")
