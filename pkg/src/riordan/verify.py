"""Self-verification battery: group laws, identities, and OEIS cross-checks.

Three suites, all exact and all offline:

* ``group``  -- randomized algebraic laws (Riordan group vs matrix algebra,
  series inversion/reversion/composition, continued-fraction transforms),
  driven by a seeded RNG so runs are reproducible;
* ``props``  -- the named identities of the triangle families (face GFs,
  closed forms, fraction triples, the polytope transfer map);
* ``oeis``   -- every embedded fixture regenerated from its construction.

Each check returns a :class:`CheckResult`; the CLI renders one line per
check and fails the run when any check fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, R, Y
from .arrays import (
    Kind,
    LowerTriMatrix,
    RiordanArray,
    binomial_array,
    face_array,
    face_matrix,
    identity_array,
    pascal_matrix,
    triangle_from_series,
)
from .families import (
    FamilySpec,
    f_closed,
    family_array,
    gamma_closed,
    gamma_from_h,
    gf_chain,
    h_closed,
    named_triple,
    narayana_array,
    narayana_closed,
    plain_f_gf,
)
from .jfraction import IndexPoly, JFraction, binomial_transform
from .oeis import FIXTURES, check_sequence, check_triangle, aerated
from .series import TruncatedSeries, egf_to_ogf, integer_coeffs

DEFAULT_SEED = 20240831


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _result(suite: str, name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, bool(ok), detail)


# -- randomized algebra ------------------------------------------------------


def _random_series(rng: random.Random, order: int, *, constant=None, linear=None):
    coeffs = [rng.randint(-4, 4) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = constant
    if linear is not None and order >= 1:
        coeffs[1] = linear
    return TruncatedSeries(coeffs)


def _random_array(rng: random.Random, kind: Kind, order: int) -> RiordanArray:
    g = _random_series(rng, order, constant=1)
    f = _random_series(rng, order, constant=0, linear=rng.choice([1, -1]))
    return RiordanArray(g, f, kind)


def _random_index_poly(rng: random.Random, allow_y: bool = True) -> IndexPoly:
    coeffs = []
    for _ in range(rng.randint(1, 3)):
        c = MultiPoly.const(rng.randint(-3, 3))
        if allow_y and rng.random() < 0.5:
            c = c + rng.randint(0, 2) * Y
        coeffs.append(c)
    return IndexPoly.from_coeffs(coeffs)


def group_suite(seed: int = DEFAULT_SEED, rounds: int = 50) -> list[CheckResult]:
    rng = random.Random(seed)
    out: list[CheckResult] = []
    order = 10

    for kind in (Kind.ORDINARY, Kind.EXPONENTIAL):
        ok = True
        for _ in range(rounds):
            a = _random_array(rng, kind, order)
            b = _random_array(rng, kind, order)
            if (a * b).matrix(order) != a.matrix(order) * b.matrix(order):
                ok = False
                break
        out.append(_result("group", f"product equals matrix product ({kind.value})", ok))

    ok = True
    for _ in range(rounds):
        a, b, c = (_random_array(rng, Kind.ORDINARY, order) for _ in range(3))
        lhs, rhs = (a * b) * c, a * (b * c)
        if lhs.g != rhs.g or lhs.f != rhs.f:
            ok = False
            break
    out.append(_result("group", "product associativity", ok))

    ok = True
    ident = identity_array(Kind.ORDINARY, order)
    for _ in range(rounds):
        a = _random_array(rng, Kind.ORDINARY, order)
        inv = a.inverse()
        prod = a * inv
        if prod.g != ident.g or prod.f != ident.f:
            ok = False
            break
        if prod.matrix(order) != ident.matrix(order):
            ok = False
            break
    out.append(_result("group", "inverse yields the identity array", ok))

    ok = all(
        (s * s.inverse()) == TruncatedSeries.one(order)
        for s in (
            _random_series(rng, order, constant=rng.choice([1, -1])) for _ in range(rounds)
        )
    )
    out.append(_result("group", "series inverse identity", ok))

    ok = True
    x = TruncatedSeries.x(order)
    for _ in range(rounds):
        f = _random_series(rng, order, constant=0, linear=rng.choice([1, -1]))
        g = f.revert()
        if f.compose(g) != x or g.compose(f) != x:
            ok = False
            break
    out.append(_result("group", "series reversion identity (both directions)", ok))

    ok = True
    for _ in range(rounds // 2):
        a = _random_series(rng, 8, constant=0)
        b = _random_series(rng, 8, constant=0)
        if (a + b).exp() != a.exp() * b.exp():
            ok = False
            break
    out.append(_result("group", "series exp is a homomorphism", ok))

    ok = True
    for _ in range(rounds // 2):
        g = _random_series(rng, 8)
        f = _random_series(rng, 8, constant=0)
        h = _random_series(rng, 8, constant=0)
        if g.compose(f).compose(h) != g.compose(f.compose(h)):
            ok = False
            break
    out.append(_result("group", "composition associativity", ok))

    ok = True
    for _ in range(20):
        frac = JFraction(_random_index_poly(rng), _random_index_poly(rng))
        for k in (1, 2, Y, Y + 1):
            shifted = frac.binomial_shift(k).expand(8).coeffs
            transformed = binomial_transform(frac.expand(8).coeffs, k)
            if any(a != b for a, b in zip(shifted, transformed)):
                ok = False
                break
        if not ok:
            break
    out.append(_result("group", "binomial shift matches the sequence transform", ok))

    ok = True
    for _ in range(20):
        frac = JFraction(_random_index_poly(rng), _random_index_poly(rng))
        n = 12
        if frac.expand(n) != frac.expand(n, levels=n // 2 + 3):
            ok = False
            break
    out.append(_result("group", "expansion depth n//2 + 1 is sufficient", ok))

    return out


# -- family identities --------------------------------------------------------


def props_suite() -> list[CheckResult]:
    out: list[CheckResult] = []
    order = 16

    # Face-matrix factorizations of the simplex and hypercube.
    simplex = named_triple("simplex", order)
    binv = binomial_array(Kind.ORDINARY, order).inverse()
    reduced = simplex.f_array * binv
    ok = (
        reduced.g == simplex.h_array.g
        and reduced.f == simplex.h_array.f
        and reduced.matrix(6) == simplex.h_array.matrix(6)
        and face_array(simplex.h_array).matrix(6) == simplex.f_array.matrix(6)
    )
    out.append(_result("props", "simplex face matrix factors through the binomial array", ok))

    b2 = RiordanArray(TruncatedSeries([0, 2], order).exp(), TruncatedSeries.x(order), Kind.EXPONENTIAL)
    bexp = binomial_array(Kind.EXPONENTIAL, order)
    reduced = b2 * bexp.inverse()
    ok = (
        reduced.g == bexp.g
        and reduced.f == bexp.f
        and reduced.matrix(6) == pascal_matrix(6)
        and (bexp * bexp).g == b2.g
        and (bexp * bexp).f == b2.f
    )
    out.append(_result("props", "hypercube face matrix factors through the binomial array", ok))

    # Ordinary family: bivariate face GFs, plain and reversed.
    spec = FamilySpec(Kind.ORDINARY, R)
    fm = face_array(family_array(spec, 12))
    ok = fm.bgf(12) == plain_f_gf(spec, 12)
    rev = face_matrix(family_array(spec, 12).matrix(12)).reversed()
    ok = ok and triangle_from_series(gf_chain(spec, 12)[2]) == rev
    out.append(_result("props", "ordinary family face GF (plain and reversed forms)", ok))

    # Ordinary family: closed forms against the constructions.
    h = family_array(spec, 12).matrix(12)
    f = face_matrix(h)
    gamma = gamma_from_h(h)
    ok = all(
        h.entry(n, k) == h_closed(n, k)
        and f.entry(n, k) == f_closed(n, k)
        and gamma.entry(n, k) == gamma_closed(n, k)
        for n in range(13)
        for k in range(n + 1)
    )
    for rv in range(6):
        hn = family_array(FamilySpec(Kind.ORDINARY, rv), 8).matrix(8)
        fn = face_matrix(hn)
        gn = gamma_from_h(hn)
        ok = ok and all(
            hn.entry(n, k) == h_closed(n, k, rv)
            and fn.entry(n, k) == f_closed(n, k, rv)
            and gn.entry(n, k) == gamma_closed(n, k, rv)
            for n in range(9)
            for k in range(n + 1)
        )
    out.append(_result("props", "ordinary family closed forms match the constructions", ok))

    # Ordinary family: the whole reversed GF chain against the triangles.
    chain = gf_chain(spec, 12)
    ok = (
        triangle_from_series(chain[0]) == gamma
        and triangle_from_series(chain[1]) == h
        and triangle_from_series(chain[2]) == f.reversed()
    )
    out.append(_result("props", "ordinary family GF chain reproduces gamma/h/f rows", ok))

    # Exponential family: reversed face rows from the weighted fraction.
    espec = FamilySpec(Kind.EXPONENTIAL, R)
    frac = JFraction(IndexPoly.constant(2 * Y + 1), IndexPoly.from_coeffs([0, R * Y * (Y + 1)]))
    rev = face_matrix(family_array(espec, 10).matrix(10)).reversed()
    ok = triangle_from_series(frac.expand(10)) == rev
    for rv in range(4):
        fr = JFraction(
            IndexPoly.constant(2 * Y + 1), IndexPoly.from_coeffs([0, rv * Y * (Y + 1)])
        )
        revn = face_matrix(family_array(FamilySpec(Kind.EXPONENTIAL, rv), 10).matrix(10)).reversed()
        ok = ok and triangle_from_series(fr.expand(10)) == revn
    out.append(_result("props", "exponential family reversed face rows match the fraction", ok))

    # Exponential family: the gamma/h/f fraction triple.
    gframe, hframe, fframe = gf_chain(espec)
    eh = family_array(espec, 10).matrix(10)
    ok = (
        triangle_from_series(gframe.expand(10)) == gamma_from_h(eh)
        and triangle_from_series(hframe.expand(10)) == eh
        and triangle_from_series(fframe.expand(10)) == face_matrix(eh).reversed()
    )
    out.append(_result("props", "exponential family fraction triple (gamma, h, face)", ok))

    # Aerated double factorials three ways.
    half_square = TruncatedSeries([0, 0, Fraction(1, 2)], 20)
    scaled = integer_coeffs(egf_to_ogf(half_square.exp()))
    frac_rows = integer_coeffs(JFraction(IndexPoly.constant(0), IndexPoly.index()).expand(20))
    want = aerated(FIXTURES["A001147"].values, 21)
    ok = scaled == want and frac_rows == want
    out.append(_result("props", "aerated double factorial expansion", ok))

    # Named fraction triples against embedded fixtures.
    for name in ("associahedron", "permutahedron"):
        triple = named_triple(name)
        ok = True
        for component, anumber in triple.fixtures.items():
            fixture = FIXTURES[anumber]
            size = len(fixture.row_lengths) - 1
            matrix = getattr(triple, f"{component}_matrix")(size)
            ok = ok and check_triangle(matrix, fixture).ok
        out.append(_result("props", f"{name} fraction triple matches its fixtures", ok))

    # The transfer map carries one triple onto the other, exactly.
    assoc, perm = named_triple("associahedron"), named_triple("permutahedron")
    ok = (
        assoc.gamma_fraction.transfer() == perm.gamma_fraction
        and assoc.h_fraction.transfer() == perm.h_fraction
        and assoc.f_fraction.transfer() == perm.f_fraction
    )
    out.append(_result("props", "index transfer maps associahedron onto permutahedron", ok))

    # Weighted Bessel-type array gives the Narayana triangle.
    nar = narayana_array(10).matrix(10)
    ok = all(
        nar.entry(n, k) == narayana_closed(n, k) for n in range(11) for k in range(n + 1)
    ) and check_triangle(nar, FIXTURES["A001263"]).ok
    out.append(_result("props", "weighted factorial-pair array gives Narayana numbers", ok))

    return out


# -- fixture regeneration -------------------------------------------------------


def _oeis_checks() -> list[tuple[str, object]]:
    simplex = named_triple("simplex")
    hypercube = named_triple("hypercube")
    assoc = named_triple("associahedron")
    perm = named_triple("permutahedron")

    half_square = TruncatedSeries([0, 0, Fraction(1, 2)], 20)
    double_factorials = integer_coeffs(egf_to_ogf(half_square.exp()))[::2]

    def rows(fraction: JFraction, anumber: str) -> LowerTriMatrix:
        size = len(FIXTURES[anumber].row_lengths) - 1
        return triangle_from_series(fraction.expand(size))

    return [
        ("A135278", lambda: check_triangle(simplex.f_matrix(9), FIXTURES["A135278"])),
        ("A074909", lambda: check_triangle(simplex.f_matrix(9).reversed(), FIXTURES["A074909"])),
        ("A038207", lambda: check_triangle(hypercube.f_matrix(9), FIXTURES["A038207"])),
        ("A013609", lambda: check_triangle(hypercube.f_matrix(9).reversed(), FIXTURES["A013609"])),
        ("A007318", lambda: check_triangle(hypercube.h_matrix(10), FIXTURES["A007318"])),
        ("A001147", lambda: check_sequence(double_factorials, FIXTURES["A001147"])),
        ("A055151", lambda: check_triangle(rows(assoc.gamma_fraction, "A055151"), FIXTURES["A055151"])),
        ("A001263", lambda: check_triangle(rows(assoc.h_fraction, "A001263"), FIXTURES["A001263"])),
        ("A033282", lambda: check_triangle(rows(assoc.f_fraction, "A033282"), FIXTURES["A033282"])),
        ("A101280", lambda: check_triangle(rows(perm.gamma_fraction, "A101280"), FIXTURES["A101280"])),
        ("A008292", lambda: check_triangle(rows(perm.h_fraction, "A008292"), FIXTURES["A008292"])),
        ("A019538", lambda: check_triangle(rows(perm.f_fraction, "A019538"), FIXTURES["A019538"])),
    ]


def oeis_suite(anumbers: list[str] | None = None) -> list[CheckResult]:
    wanted = set(anumbers) if anumbers else None
    out = []
    for anumber, run in _oeis_checks():
        if wanted is not None and anumber not in wanted:
            continue
        report = run()
        out.append(_result("oeis", f"{anumber} regenerated from its construction", report.ok, report.message()))
    return out


SUITES = ("group", "props", "oeis")


def run_suite(name: str, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    if name == "group":
        return group_suite(seed)
    if name == "props":
        return props_suite()
    if name == "oeis":
        return oeis_suite()
    if name == "all":
        return group_suite(seed) + props_suite() + oeis_suite()
    raise ValueError(f"unknown suite {name!r}; pick from {SUITES + ('all',)}")
