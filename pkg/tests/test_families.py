import pytest

from riordan.algebra import R, Y
from riordan.arrays import (
    Kind,
    LowerTriMatrix,
    binomial_array,
    face_matrix,
    series_from_triangle,
    triangle_from_series,
)
from riordan.families import (
    FamilySpec,
    NotPalindromic,
    f_closed,
    f_matrix,
    family_array,
    family_triple,
    gamma_closed,
    gamma_from_h,
    gamma_matrix,
    gf_chain,
    h_closed,
    h_matrix,
    named_triple,
    narayana_array,
    narayana_closed,
    plain_f_gf,
)
from riordan.oeis import FIXTURES, check_triangle
from riordan.series import TruncatedSeries

ORD = FamilySpec(Kind.ORDINARY, R)
EXP = FamilySpec(Kind.EXPONENTIAL, R)


def test_family_reduces_to_pascal_at_r_zero():
    for kind in (Kind.ORDINARY, Kind.EXPONENTIAL):
        fam = family_array(FamilySpec(kind, 0), 10)
        b = binomial_array(kind, 10)
        assert fam.g == b.g and fam.f == b.f


def test_generalized_flavor_is_rejected():
    with pytest.raises(ValueError):
        FamilySpec(Kind.GENERALIZED, 1)


def test_family_rows_are_pascal_like():
    assert h_matrix(ORD, 8).is_pascal_like()
    assert h_matrix(EXP, 8).is_pascal_like()
    assert h_matrix(FamilySpec(Kind.ORDINARY, 3), 8).is_pascal_like()
    assert h_matrix(ORD, 8).entry(4, 1) == h_closed(4, 1) == 3 * R + 4


def test_gamma_closed_examples():
    assert gamma_closed(4, 1) == 3 * R
    assert all(gamma_closed(n, 0) == 1 for n in range(10))
    assert gamma_closed(4, 2) == R**2
    assert gamma_closed(3, 2) == 0  # 2k > n falls outside the support


def test_h_closed_examples():
    assert h_closed(2, 1) == R + 2
    assert all(h_closed(n, 0) == 1 for n in range(10))
    assert all(h_closed(n, n) == 1 for n in range(10))


def test_f_closed_examples():
    assert f_closed(4, 0) == R**2 + 12 * R + 16
    assert f_closed(3, 2) == 2 * R + 6
    assert all(f_closed(n, n) == 1 for n in range(10))


def test_closed_forms_match_constructions():
    triple = family_triple(ORD, 8)
    for n in range(9):
        for k in range(n + 1):
            assert triple.h.entry(n, k) == h_closed(n, k)
            assert triple.f.entry(n, k) == f_closed(n, k)
            assert triple.gamma.entry(n, k) == gamma_closed(n, k)


@pytest.mark.parametrize("rv", range(6))
def test_exponential_family_entries_are_integers(rv):
    m = h_matrix(FamilySpec(Kind.EXPONENTIAL, rv), 12)  # raises NonIntegralEntry otherwise
    assert m.entry(2, 1) == rv + 2
    assert m.is_pascal_like()


def test_gamma_from_h_examples():
    assert gamma_from_h(LowerTriMatrix([[1], [1, 1]])).rows == ((1,), (1, 0))

    narayana = LowerTriMatrix([[1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 20, 10, 1]])
    gamma = gamma_from_h(narayana)
    assert check_triangle(gamma, FIXTURES["A055151"]).ok

    with pytest.raises(NotPalindromic):
        gamma_from_h(LowerTriMatrix([[1], [2, 1]]))


def test_gamma_matrix_matches_closed_form():
    m = gamma_matrix(ORD, 8)
    for n in range(9):
        for k in range(n + 1):
            assert m.entry(n, k) == gamma_closed(n, k)


def test_gf_chain_ordinary():
    chain = gf_chain(ORD, 10)
    triple = family_triple(ORD, 10)
    assert triangle_from_series(chain[0]) == triple.gamma
    assert triangle_from_series(chain[1]) == triple.h
    assert triangle_from_series(chain[2]) == triple.f.reversed()
    assert plain_f_gf(ORD, 10) == series_from_triangle(triple.f)


def test_gf_chain_collapses_at_r_zero():
    chain = gf_chain(FamilySpec(Kind.ORDINARY, 0), 8)
    assert chain[0] == TruncatedSeries.ratio([1], [1, -1], 8)
    assert chain[1] == TruncatedSeries.ratio([1], [1, -(Y + 1)], 8)
    assert chain[2] == TruncatedSeries.ratio([1], [1, -(2 * Y + 1)], 8)


def test_gf_chain_exponential_is_a_fraction_triple():
    gamma_frac, h_frac, f_frac = gf_chain(EXP)
    eh = family_array(EXP, 8).matrix(8)
    assert triangle_from_series(gamma_frac.expand(8)) == gamma_from_h(eh)
    assert triangle_from_series(h_frac.expand(8)) == eh
    assert triangle_from_series(f_frac.expand(8)) == face_matrix(eh).reversed()


def test_named_triples_hit_their_fixtures():
    for name in ("simplex", "hypercube", "associahedron", "permutahedron"):
        triple = named_triple(name)
        for component, anumber in triple.fixtures.items():
            fixture = FIXTURES[anumber]
            size = len(fixture.row_lengths) - 1
            if component.endswith("_reversed"):
                matrix = getattr(triple, f"{component[:-9]}_matrix")(size).reversed()
            else:
                matrix = getattr(triple, f"{component}_matrix")(size)
            report = check_triangle(matrix, fixture)
            assert report.ok, report.message()


def test_named_triple_details():
    hypercube = named_triple("hypercube")
    assert hypercube.f_matrix(2).rows[2] == (4, 4, 1)
    assoc = named_triple("associahedron")
    assert assoc.h_matrix(3).rows == ((1,), (1, 1), (1, 3, 1), (1, 6, 6, 1))
    perm = named_triple("permutahedron")
    assert perm.h_matrix(3).rows == ((1,), (1, 1), (1, 4, 1), (1, 11, 11, 1))
    with pytest.raises(ValueError):
        named_triple("cross-polytope")


def test_simplex_face_factorization_consistency():
    simplex = named_triple("simplex")
    assert face_matrix(simplex.h_array.matrix(8)) == simplex.f_array.matrix(8)


def test_exponential_face_matrix_via_spec():
    m = f_matrix(FamilySpec(Kind.EXPONENTIAL, 1), 4).reversed()
    assert m.rows[3] == (1, 9, 21, 14)
    assert m.rows[4] == (1, 14, 57, 86, 43)


def test_narayana_array():
    nar = narayana_array(10).matrix(10)
    for n in range(11):
        for k in range(n + 1):
            assert nar.entry(n, k) == narayana_closed(n, k)
    assert check_triangle(nar, FIXTURES["A001263"]).ok
