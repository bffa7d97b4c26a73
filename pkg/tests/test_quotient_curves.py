from fractions import Fraction

import pytest

from belyi.exact_algebra import Poly, parse_poly
from belyi.exceptions import (
    IrrationalPointError,
    NotTorsionPointError,
    SingularCurveError,
    UnsupportedCurveError,
)
from belyi.quotient_curves import (
    BA4_COEFFICIENTS,
    BV4_COEFFICIENTS,
    INFINITY,
    J_BA4,
    J_BV4,
    Z2_EVEN_SEXTIC,
    Z2_LAMBDA_SQ,
    Z2_SEXTIC,
    Z3_EVEN_SEXTIC,
    Z3_LAMBDA_SQ,
    Z3_SEXTIC,
    HyperellipticModel,
    QuarticModel,
    RationalPoint,
    WeierstrassCurve,
    cubic_swap,
    curve_report,
    derive_z2_cubics,
    derive_z3_sextic,
    division_poly_3,
    even_quotient_model,
    isomorphic_over_q,
    quartic_j,
    rational_roots,
    reciprocal_symmetry,
    substitution_identity,
    three_isogeny,
    three_torsion_point,
    twist_scale,
    velu_3_isogeny,
    weierstrass_invariants,
    z3_sextic_resultant,
)


@pytest.fixture
def bv4() -> WeierstrassCurve:
    return WeierstrassCurve.from_coefficients(BV4_COEFFICIENTS)


@pytest.fixture
def ba4() -> WeierstrassCurve:
    return WeierstrassCurve.from_coefficients(BA4_COEFFICIENTS)


def test_z3_sextic_two_derivations():
    # Act
    sextic = derive_z3_sextic()

    # Assert
    assert sextic == parse_poly(Z3_SEXTIC)
    assert z3_sextic_resultant() == sextic * Fraction(1, 27)


def test_z2_cubics():
    # Act
    first, second = derive_z2_cubics()

    # Assert
    assert first == parse_poly("x^3+7*x^2+8*x+4")
    assert second == parse_poly("4*x^3+8*x^2+7*x+1")
    assert first * second == parse_poly(Z2_SEXTIC)
    assert cubic_swap(first, second)
    assert not cubic_swap(first, first)


@pytest.mark.parametrize("text", [Z3_SEXTIC, Z2_SEXTIC], ids=["HP-z3", "HP-z2"])
def test_sextics_are_genus_two_and_reciprocal(text):
    # Arrange
    p = parse_poly(text)

    # Act
    model = HyperellipticModel(p)

    # Assert
    assert model.genus == 2
    assert reciprocal_symmetry(p)


@pytest.mark.parametrize(
    "text, error",
    [
        ("x^4+1", ValueError),  # Test ID: ERR-degree
        ("(x-1)^2*(x^4+1)", SingularCurveError),  # Test ID: ERR-repeated-root
    ],
    ids=["ERR-degree", "ERR-repeated-root"],
)
def test_hyperelliptic_model_errors(text, error):
    # Act & Assert
    with pytest.raises(error):
        HyperellipticModel(parse_poly(text))


def test_reciprocal_symmetry_fails_for_non_palindromes():
    assert not reciprocal_symmetry(parse_poly("x^6+x+1"))
    assert not reciprocal_symmetry(parse_poly("x^5+1"))


@pytest.mark.parametrize(
    "sextic, even, lambda_sq, value_at_one",
    [
        (Z3_SEXTIC, Z3_EVEN_SEXTIC, Z3_LAMBDA_SQ, 3200),  # Test ID: HP-z3
        (Z2_SEXTIC, Z2_EVEN_SEXTIC, Z2_LAMBDA_SQ, -6400),  # Test ID: HP-z2
    ],
    ids=["HP-z3", "HP-z2"],
)
def test_substitution_identity(sextic, even, lambda_sq, value_at_one):
    # Arrange
    p, r = parse_poly(sextic), parse_poly(even, "z")

    # Act
    check = substitution_identity(p, r, lambda_sq)

    # Assert
    assert check
    assert p(1) * lambda_sq == value_at_one == 64 * r(0)


def test_substitution_identity_with_wrong_constant():
    # Act
    check = substitution_identity(parse_poly(Z3_SEXTIC), parse_poly(Z3_EVEN_SEXTIC, "z"), Fraction(1))

    # Assert
    assert not check
    assert check.detail.startswith("coefficient of x^6")


def test_substitution_identity_needs_sextics():
    # Act & Assert
    with pytest.raises(ValueError):
        substitution_identity(parse_poly("x^5+1"), parse_poly(Z3_EVEN_SEXTIC, "z"), Z3_LAMBDA_SQ)


@pytest.mark.parametrize(
    "even, expected_j",
    [
        (Z3_EVEN_SEXTIC, 526250),  # Test ID: HP-s3
        (Z2_EVEN_SEXTIC, -526250),  # Test ID: HP-v4
    ],
    ids=["HP-s3", "HP-v4"],
)
def test_even_quotients_share_j(even, expected_j):
    # Act
    model = even_quotient_model(parse_poly(even, "z"))

    # Assert
    assert model.invariant_i == 3625
    assert model.invariant_j == expected_j
    assert quartic_j(model) == J_BV4


def test_even_quotient_model_rejects_odd_terms():
    # Act & Assert
    with pytest.raises(ValueError):
        even_quotient_model(parse_poly("z^6+z", "z"))


def test_quartic_model_round_trip():
    # Arrange
    p = parse_poly("x^4+3*x-2")

    # Act
    model = QuarticModel.from_poly(p)

    # Assert
    assert (model.a, model.b, model.c, model.d, model.e) == (1, 0, 0, 3, -2)
    assert model.poly == p
    with pytest.raises(ValueError):
        QuarticModel.from_poly(parse_poly("x^5"))


def test_quartic_j_special_values():
    # Act & Assert
    assert quartic_j(QuarticModel(1, 0, 0, 0, 1)) == 1728
    with pytest.raises(SingularCurveError):
        quartic_j(QuarticModel.from_poly(parse_poly("(x^2-1)^2")))


def test_weierstrass_invariants(bv4):
    # Act
    invariants = weierstrass_invariants(bv4)

    # Assert
    assert (invariants.b2, invariants.b4, invariants.b6, invariants.b8) == (1, -151, 1193, -5402)
    assert (invariants.c4, invariants.c6) == (3625, -263125)
    assert invariants.discriminant == -12_500_000
    assert invariants.j == J_BV4
    assert bv4.equation() == "y^2+x*y+y = x^3-76*x+298"


def test_singular_curve():
    # Act & Assert
    with pytest.raises(SingularCurveError):
        WeierstrassCurve(0, 0, 0, 0, 0)


def test_three_torsion_point(bv4):
    # Arrange
    psi3 = division_poly_3(bv4)

    # Act
    point = three_torsion_point(bv4, 2)

    # Assert
    assert psi3 == parse_poly("3*x^4+x^3-453*x^2+3579*x-5402")
    assert Fraction(2) in rational_roots(psi3)
    assert point == RationalPoint(Fraction(2), Fraction(11))
    assert bv4.contains(point)
    assert bv4.multiply(2, point) == RationalPoint(Fraction(2), Fraction(-14)) == bv4.negate(point)
    assert bv4.multiply(3, point) == INFINITY
    assert str(point) == "(2, 11)"
    assert str(INFINITY) == "O"


def test_three_torsion_point_on_j_zero_curve():
    # Arrange
    e = WeierstrassCurve(0, 0, 0, 0, 1)

    # Act
    point = three_torsion_point(e, 0)

    # Assert
    assert division_poly_3(e) == parse_poly("3*x^4+12*x")
    assert rational_roots(division_poly_3(e)) == [0]
    assert point == RationalPoint(Fraction(0), Fraction(1))


def test_three_torsion_point_errors(bv4):
    # Act & Assert
    with pytest.raises(NotTorsionPointError):
        three_torsion_point(bv4, 3)
    with pytest.raises(IrrationalPointError) as exc_info:
        three_torsion_point(WeierstrassCurve(0, 0, 0, 0, 2), 0)
    assert exc_info.value.discriminant == 8


def test_group_law_identity_and_inverse(bv4):
    # Arrange
    point = three_torsion_point(bv4, 2)

    # Act & Assert
    assert bv4.add(INFINITY, point) == point
    assert bv4.add(point, bv4.negate(point)) == INFINITY
    assert bv4.multiply(-1, point) == bv4.negate(point)
    assert bv4.multiply(0, point) == INFINITY


def test_velu_codomain(bv4, ba4):
    # Act
    codomain = velu_3_isogeny(bv4, three_torsion_point(bv4, 2))

    # Assert
    assert codomain == ba4
    assert codomain.c4 == -26375
    assert codomain.j == J_BA4


@pytest.mark.parametrize(
    "kernel",
    [INFINITY, RationalPoint(Fraction(0), Fraction(0))],
    ids=["ERR-infinity", "ERR-off-curve"],
)
def test_velu_rejects_bad_kernels(bv4, kernel):
    # Act & Assert
    with pytest.raises(NotTorsionPointError):
        velu_3_isogeny(bv4, kernel)


def test_isogeny_bookkeeping(bv4, ba4):
    # Arrange
    phi = three_isogeny(bv4, three_torsion_point(bv4, 2))

    # Act
    round_trip = phi.then(phi.dual())

    # Assert
    assert phi.codomain == ba4
    assert len(phi.kernel) == 3
    assert (round_trip.domain, round_trip.codomain, round_trip.degree) == (bv4, bv4, 9)
    with pytest.raises(ValueError):
        phi.then(phi)


def test_twists(bv4, ba4):
    # Arrange
    e = WeierstrassCurve(0, 0, 0, -2, 3)

    # Act & Assert
    assert twist_scale(bv4, bv4) == 1
    assert twist_scale(e, WeierstrassCurve(0, 0, 0, -32, 192)) == 2
    assert not isomorphic_over_q(e, WeierstrassCurve(0, 0, 0, -2, -3))
    assert not isomorphic_over_q(bv4, ba4)


@pytest.mark.parametrize(
    "coefficients",
    [(0, 0, 0, 0, 1), (0, 0, 0, -1, 0)],
    ids=["ERR-j-zero", "ERR-j-1728"],
)
def test_twist_scale_unsupported(coefficients):
    # Arrange
    e = WeierstrassCurve(*coefficients)

    # Act & Assert
    with pytest.raises(UnsupportedCurveError):
        twist_scale(e, e)


def test_curve_report(bv4):
    # Act
    report = curve_report(bv4)

    # Assert
    assert report["equation"] == "y^2+x*y+y = x^3-76*x+298"
    assert report["j"] == "-121945/32"
    assert report["discriminant"] == "-12500000"


def prime_support(value: Fraction) -> set[int]:
    primes = set()
    for n in (abs(value.numerator), value.denominator):
        p = 2
        while p * p <= n:
            while n % p == 0:
                primes.add(p)
                n //= p
            p += 1
        if n > 1:
            primes.add(n)
    return primes


def test_velu_codomain_has_good_reduction_where_the_domain_does(bv4):
    # Act
    codomain = velu_3_isogeny(bv4, three_torsion_point(bv4, 2))

    # Assert
    assert prime_support(bv4.discriminant) == {2, 5}
    assert codomain.discriminant == -(2 ** 15) * 5 ** 8
    assert prime_support(codomain.discriminant) <= prime_support(bv4.discriminant)


@pytest.mark.parametrize(
    "even, scale",
    [
        (Z3_EVEN_SEXTIC, Fraction(2)),  # Test ID: HP-s3-double
        (Z3_EVEN_SEXTIC, Fraction(-1, 3)),  # Test ID: HP-s3-negative-third
        (Z2_EVEN_SEXTIC, Fraction(5, 7)),  # Test ID: HP-v4-five-sevenths
    ],
    ids=["HP-s3-double", "HP-s3-negative-third", "HP-v4-five-sevenths"],
)
def test_quartic_j_is_unchanged_by_scaling_z(even, scale):
    # Arrange
    r = parse_poly(even, "z")
    scaled = Poly(tuple(c * scale ** k for k, c in enumerate(r.coeffs)), "z")

    # Act
    j = quartic_j(even_quotient_model(scaled))

    # Assert
    assert scaled != r
    assert j == quartic_j(even_quotient_model(r)) == J_BV4
