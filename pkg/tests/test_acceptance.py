"""Acceptance gate: every advertised result, checked exactly.

Criteria 1-6 pin down the worked models (the half-integer three-point
divisor, the degree-1/42 divisor, the weight-data Tomari values, the
rational-scroll cone, the chain-criterion rejection, and the elliptic
verdicts) with exact expected objects, no tolerances.  Criterion 7 runs
the property suites, each with at least 200 fuzzed cases.  The terminal
summary hook in conftest.py reports one PASS/FAIL line per criterion.
"""

import math
import warnings
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qsection.divisors import (
    EC_ORIGIN,
    P1_INFINITY,
    ECAffine,
    FiniteP1,
    ProjectiveLine,
    QDivisor,
)
from qsection.elliptic import (
    WeierstrassCurve,
    ec_add,
    ec_is_principal,
    ec_negate,
    ec_prime_exists,
)
from qsection.errors import BoundTooSmallWarning, FitFailedError, QSectionError
from qsection.exact_arith import NumberField, Poly
from qsection.linalg import SpanBuilder
from qsection.p1 import RationalFunctionP1, divisor_of, principal_function, rr_basis
from qsection.prime_elements import (
    PrimeCandidate,
    construct_prime,
    enumerate_primes,
    necessary_check,
    primality_oracle,
    quotient_profile,
    veronese_transform,
)
from qsection.section_ring import (
    HilbertSeries,
    a_invariant,
    build_ring,
    find_relations,
    graded_dimension,
    hilbert_series,
    tomari_limit,
)
from qsection.semigroups import (
    NumericalSemigroup,
    a_invariant_semigroup,
    frobenius,
    ratsing_criterion,
    semigroup_from_profile,
)

LINE = ProjectiveLine()
W = Poly.variable()

P0 = FiniteP1(F(0))
P1 = FiniteP1(F(1))

D_HALF = QDivisor(
    LINE, [(P0, F(1, 2)), (P1_INFINITY, F(1, 2)), (P1, F(-1, 2))]
)
D_42 = QDivisor(
    LINE, [(P1_INFINITY, F(1, 2)), (P0, F(-1, 3)), (P1, F(-1, 7))]
)
D_SCROLL = QDivisor(LINE, [(P0, F(5, 7)), (P1_INFINITY, F(-4, 7))])


def rf(numer_coeffs, denom_coeffs=None):
    denom = None if denom_coeffs is None else Poly(denom_coeffs)
    return RationalFunctionP1(Poly(numer_coeffs), denom)


@pytest.fixture(scope="module")
def model_half():
    return build_ring(D_HALF, 10)


@pytest.fixture(scope="module")
def model_42():
    return build_ring(D_42, 48)


@pytest.fixture(scope="module")
def verdicts_42():
    return enumerate_primes(D_42)


@pytest.fixture(scope="module")
def model_scroll():
    return build_ring(D_SCROLL)


# ---------------------------------------------------------------- criterion 1


def test_c1_generator_degrees(model_half):
    assert sorted(g.degree for g in model_half.generators) == [2, 2, 3]


def test_c1_single_relation_in_degree_six(model_half):
    relations = find_relations(model_half)
    assert len(relations) == 1
    assert relations[0].degree == 6


def test_c1_hilbert_series(model_half):
    assert hilbert_series(model_half) == HilbertSeries(
        (1, 0, 0, 0, 0, 0, -1), (2, 2, 3)
    )


def test_c1_tomari_limit_equals_degree(model_half):
    limit = tomari_limit(hilbert_series(model_half), 2)
    assert limit == F(1, 2)
    assert limit == D_HALF.degree()


def test_c1_enumeration_is_one_degree_two_family():
    verdicts = enumerate_primes(D_HALF)
    assert len(verdicts) == 1
    v = verdicts[0]
    assert v.degree == 2
    assert v.kind == "family"
    assert v.excluded == (P0, P1, P1_INFINITY)


def test_c1_oracle_confirms_and_refutes(model_half):
    # (w-1)(w-2)/w in degree two is prime ...
    confirmed = primality_oracle(
        model_half, PrimeCandidate(rf([2, -3, 1], [0, 1]), 2)
    )
    assert confirmed.is_prime and confirmed.kind == "ok"
    # ... while the generator w-1 in degree two is not: the forced point
    # lands in the fractional support and a degree-(3,3) product witnesses
    # the failure
    refuted = primality_oracle(model_half, PrimeCandidate(rf([-1, 1]), 2))
    assert not refuted.is_prime
    assert refuted.kind == "product"
    assert refuted.witness == (3, 3)


# ---------------------------------------------------------------- criterion 2


def test_c2_degree_is_one_forty_second():
    assert D_42.degree() == F(1, 42)
    assert D_42.common_denominator() == 42


def test_c2_enumeration_degrees_and_kinds(verdicts_42):
    assert [v.degree for v in verdicts_42] == [6, 14, 21, 42]
    assert [v.kind for v in verdicts_42] == ["unique", "unique", "unique", "family"]


def test_c2_unique_witness_divisors(verdicts_42):
    expected = {
        6: QDivisor(LINE, [(P0, 2), (P1, 1), (P1_INFINITY, -3)]),
        14: QDivisor(LINE, [(P0, 5), (P1, 2), (P1_INFINITY, -7)]),
        21: QDivisor(LINE, [(P0, 7), (P1, 3), (P1_INFINITY, -10)]),
    }
    for v in verdicts_42[:3]:
        assert v.generator_divisor == expected[v.degree]
        assert divisor_of(v.generator, LINE) == expected[v.degree]


def test_c2_family_samples_have_advertised_form(verdicts_42):
    family = verdicts_42[3]
    assert family.degree == 42
    assert family.excluded == (P0, P1, P1_INFINITY)
    assert len(family.samples) == 2
    for point, g in family.samples:
        lam = point.coord
        expected = RationalFunctionP1(
            W**14 * Poly([-1, 1]) ** 6 * Poly([-lam, 1])
        )
        assert g == expected


def test_c2_necessary_checks_pass_for_all_four(model_42, verdicts_42):
    candidates = [
        (v.generator, v.degree) for v in verdicts_42[:3]
    ] + [(verdicts_42[3].samples[0][1], 42)]
    seen_s = []
    for g, d in candidates:
        report = necessary_check(model_42, PrimeCandidate(g, d))
        assert report.gcd_ok
        assert report.scaled_divisor_ok
        assert report.degree_identity_ok
        assert report.passed
        seen_s.append(report.s)
    assert seen_s == [7, 3, 2, 1]


# ---------------------------------------------------------------- criterion 3


def test_c3_tomari_two_fifteenths():
    hs = HilbertSeries.from_weights([4, 5, 6], [16])
    assert tomari_limit(hs, 2) == F(2, 15)


def test_c3_tomari_one():
    hs = HilbertSeries.from_weights([3, 2, 1], [6])
    assert tomari_limit(hs, 2) == 1


# ---------------------------------------------------------------- criterion 4


def test_c4_generator_and_relation_degrees(model_scroll):
    assert sorted(g.degree for g in model_scroll.generators) == [3, 5, 7, 7]
    assert sorted(r.degree for r in find_relations(model_scroll)) == [10, 12, 14]


def test_c4_quotient_semigroup(model_scroll):
    cand = construct_prime(D_SCROLL, 7, P1)
    profile = quotient_profile(model_scroll, cand)
    H = semigroup_from_profile(profile)
    assert H.generators == (3, 5, 7)
    assert frobenius(H) == 4


def test_c4_a_invariant_both_routes(model_scroll):
    via_series = a_invariant(hilbert_series(model_scroll))
    via_semigroup = a_invariant_semigroup(NumericalSemigroup([3, 5, 7]), 7)
    assert via_series == -3
    assert via_semigroup == -3


def test_c4_chain_criterion_holds():
    report = ratsing_criterion(7, [3, 5, 7])
    assert report.chain_holds
    assert report.minimal_multiplicity


def test_c4_enumeration_is_single_degree_seven_family():
    verdicts = enumerate_primes(D_SCROLL)
    assert len(verdicts) == 1
    v = verdicts[0]
    assert v.degree == 7
    assert v.kind == "family"
    assert v.excluded == (P0, P1_INFINITY)


# ---------------------------------------------------------------- criterion 5


def test_c5_chain_criterion_rejects():
    report = ratsing_criterion(1, [3, 2])
    assert not report.chain_holds


def test_c5_a_invariant_vanishes():
    assert a_invariant_semigroup(NumericalSemigroup([2, 3]), 1) == 0


# ---------------------------------------------------------------- criterion 6

CYCLO = NumberField((1, 1, 1))
THETA = CYCLO.gen()
E_TWO_TORSION = WeierstrassCurve(0, -1, field=CYCLO)
T1 = ECAffine(CYCLO.from_rational(F(1)), CYCLO.zero())
T2 = ECAffine(THETA, CYCLO.zero())
T3 = ECAffine(-THETA - CYCLO.one(), CYCLO.zero())

GAUSS = NumberField((1, 0, 1))
E_THREE_TORSION = WeierstrassCurve(0, -1, field=GAUSS)
U1 = ECAffine(GAUSS.zero(), GAUSS.gen())
U2 = ECAffine(GAUSS.zero(), -GAUSS.gen())


def test_c6_prime_exists_for_half_two_torsion():
    D = QDivisor(
        E_TWO_TORSION,
        [(T1, F(1, 2)), (T2, F(1, 2)), (T3, F(1, 2)), (EC_ORIGIN, -1)],
    )
    verdict = ec_prime_exists(D, 2)
    assert verdict.exists
    assert verdict.point == EC_ORIGIN
    assert verdict.reason == "ok"


def test_c6_prime_blocked_for_half_three_torsion():
    D = QDivisor(
        E_THREE_TORSION,
        [(U1, F(1, 2)), (U2, F(1, 2)), (EC_ORIGIN, F(-1, 2))],
    )
    verdict = ec_prime_exists(D, 2)
    assert not verdict.exists
    assert verdict.point == EC_ORIGIN
    assert verdict.reason == "in_frac_support"
    assert EC_ORIGIN in D.fractional_support()


def test_c6_principal_divisor_checks():
    # the vertical function on the two-torsion curve vanishes at the three
    # half-period points with a triple pole at the origin
    assert ec_is_principal(
        QDivisor(
            E_TWO_TORSION, [(T1, 1), (T2, 1), (T3, 1), (EC_ORIGIN, -3)]
        )
    )
    # the coordinate function on the three-torsion curve vanishes at the
    # two flexes with a double pole at the origin
    assert ec_is_principal(
        QDivisor(E_THREE_TORSION, [(U1, 1), (U2, 1), (EC_ORIGIN, -2)])
    )
    assert not ec_is_principal(
        QDivisor(E_TWO_TORSION, [(T1, 1), (EC_ORIGIN, -1)])
    )


# ---------------------------------------------------------------- criterion 7


@st.composite
def integral_divisors(draw):
    coords = draw(
        st.lists(st.integers(-5, 5), min_size=1, max_size=4, unique=True)
    )
    entries = [(FiniteP1(F(c)), draw(st.integers(-3, 4))) for c in coords]
    if draw(st.booleans()):
        entries.append((P1_INFINITY, draw(st.integers(-3, 4))))
    return QDivisor(LINE, entries)


@given(integral_divisors())
@settings(max_examples=200)
def test_c7_rr_basis_dimension_formula(E):
    basis = rr_basis(E)
    assert len(basis) == max(int(E.degree()) + 1, 0)
    for g in basis:
        assert (divisor_of(g, LINE) + E).is_effective()


@st.composite
def split_rational_functions(draw):
    roots = draw(st.lists(st.integers(-4, 4), max_size=3, unique=True))
    poles = draw(st.lists(st.integers(-4, 4), max_size=3, unique=True))
    numer = Poly.one()
    for r in roots:
        numer = numer * Poly([-r, 1]) ** draw(st.integers(1, 2))
    denom = Poly.one()
    for p in poles:
        denom = denom * Poly([-p, 1]) ** draw(st.integers(1, 2))
    scale = draw(st.sampled_from([F(1), F(2), F(-1), F(3, 2), F(-5, 3)]))
    return RationalFunctionP1(numer, denom).scale(scale)


@given(split_rational_functions(), split_rational_functions())
@settings(max_examples=200)
def test_c7_divisor_additivity_and_zero_degree(g, h):
    dg = divisor_of(g, LINE)
    dh = divisor_of(h, LINE)
    assert dg.degree() == 0
    assert divisor_of(g * h, LINE) == dg + dh


@st.composite
def degree_zero_divisors(draw):
    coords = draw(
        st.lists(st.integers(-5, 5), min_size=1, max_size=4, unique=True)
    )
    coeffs = [draw(st.integers(-3, 3)) for _ in coords]
    entries = [(FiniteP1(F(c)), e) for c, e in zip(coords, coeffs)]
    entries.append((P1_INFINITY, -sum(coeffs)))
    return QDivisor(LINE, entries)


@given(degree_zero_divisors())
@settings(max_examples=200)
def test_c7_principal_function_round_trip(A):
    g = principal_function(A)
    assert divisor_of(g, LINE) == A


@st.composite
def small_qdivisors(draw):
    coords = draw(
        st.lists(st.integers(-3, 3), min_size=1, max_size=3, unique=True)
    )
    q = draw(st.sampled_from([1, 2, 3, 4, 5, 6]))
    entries = [
        (FiniteP1(F(c)), F(draw(st.integers(-2 * q, 2 * q)), q)) for c in coords
    ]
    if draw(st.booleans()):
        entries.append((P1_INFINITY, F(draw(st.integers(-2 * q, 2 * q)), q)))
    return QDivisor(LINE, entries)


@given(small_qdivisors(), st.integers(1, 7), st.integers(0, 10))
@settings(max_examples=200)
def test_c7_veronese_dimension_consistency(D, s, n):
    assert graded_dimension(veronese_transform(D, s), n) == graded_dimension(
        D, s * n
    )


@st.composite
def small_ample_divisors(draw):
    """Ample divisors with at most 4 points and denominators at most 7.

    All coefficients share one base denominator q <= 7 so the common
    denominator stays small; after reduction the individual denominators
    divide q.  Draws are biased toward small q because the per-example
    model cost grows quickly with it.
    """
    q = draw(st.sampled_from([1, 1, 2, 2, 3, 3, 4, 4, 5, 6, 7]))
    npts = draw(st.integers(1, 4))
    coords = draw(
        st.lists(st.integers(-3, 3), min_size=npts, max_size=npts, unique=True)
    )
    points = [FiniteP1(F(c)) for c in coords]
    if draw(st.booleans()):
        points[0] = P1_INFINITY
    entries = [(points[0], F(draw(st.integers(1, q)), q))]
    entries += [
        (pt, F(draw(st.integers(-q, q)), q)) for pt in points[1:]
    ]
    return QDivisor(LINE, entries)


@given(small_ample_divisors())
@settings(max_examples=200)
def test_c7_tomari_limit_matches_degree(D):
    degree = D.degree()
    assume(0 < degree <= 1)
    N = D.common_denominator()
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error", BoundTooSmallWarning)
            model = build_ring(D, 2 * N + 4)
        hs = hilbert_series(model)
    except (BoundTooSmallWarning, FitFailedError):
        # slow path: a generator sat at the fast bound, so rebuild with
        # the generous default-style window and let any failure surface
        model = build_ring(D, 3 * N + 9)
        hs = hilbert_series(model)
    assert tomari_limit(hs, 2) == degree


@st.composite
def prime_constructions(draw):
    N = draw(st.sampled_from([2, 3, 4]))
    a = draw(st.integers(-3, 3))
    b = draw(st.integers(-3, 3))
    D = QDivisor(
        LINE,
        [(P0, F(a, N)), (P1, F(b, N)), (P1_INFINITY, F(1 - a - b, N))],
    )
    point = FiniteP1(F(draw(st.integers(2, 5))))
    return D, N, point


@given(prime_constructions())
@settings(max_examples=200)
def test_c7_hilbert_quotient_identity(drawn):
    """dim R_n - dim R_{n-d} equals dim (R/xR)_n and never goes negative.

    The right side is recomputed here from scratch: the image of
    multiplication by x inside each graded piece, by exact row reduction.
    """
    D, N, point = drawn
    try:
        cand = construct_prime(D, N, point)
    except QSectionError:
        assume(False)
    model = build_ring(D)
    profile = quotient_profile(model, cand)
    for n in range(model.bound + 1):
        piece = model.piece(n)
        span = SpanBuilder(piece.dim)
        if n >= N:
            for h in model.piece(n - N).basis:
                span.add(piece.member(cand.g * h))
        quotient_dim = piece.dim - span.rank
        assert quotient_dim == profile.dims[n]
        assert quotient_dim >= 0


@given(st.integers(2, 30), st.integers(2, 30))
@settings(max_examples=200)
def test_c7_two_generator_frobenius_oracle(a, b):
    assume(math.gcd(a, b) == 1)
    H = NumericalSemigroup([a, b])
    assert frobenius(H) == a * b - a - b
    assert len(H.gaps) == (a - 1) * (b - 1) // 2


E_SIX = WeierstrassCurve(0, 1)
SIX_POOL = (
    EC_ORIGIN,
    ECAffine(F(2), F(3)),
    ECAffine(F(0), F(1)),
    ECAffine(F(-1), F(0)),
    ECAffine(F(0), F(-1)),
    ECAffine(F(2), F(-3)),
)
TORSION_POOLS = (
    (E_SIX, SIX_POOL),
    (E_TWO_TORSION, (EC_ORIGIN, T1, T2, T3)),
    (E_THREE_TORSION, (EC_ORIGIN, U1, U2)),
)


@st.composite
def curve_with_three_points(draw):
    curve, pool = draw(st.sampled_from(TORSION_POOLS))
    return (
        curve,
        draw(st.sampled_from(pool)),
        draw(st.sampled_from(pool)),
        draw(st.sampled_from(pool)),
    )


@given(curve_with_three_points())
@settings(max_examples=200)
def test_c7_elliptic_group_axioms(drawn):
    curve, a, b, c = drawn
    assert ec_add(curve, a, EC_ORIGIN) == a
    assert ec_add(curve, a, ec_negate(curve, a)) == EC_ORIGIN
    assert ec_add(curve, a, b) == ec_add(curve, b, a)
    assert ec_add(curve, ec_add(curve, a, b), c) == ec_add(
        curve, a, ec_add(curve, b, c)
    )
