# Description: Exact equations of the quotients of Bring's curve and the elliptic curves behind them.
import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Any, Optional, Sequence

from belyi.exact_algebra import (
    IdentityCheck,
    Poly,
    compare_polys,
    parse_poly,
    poly_gcd,
    resultant,
)
from belyi.exceptions import (
    IrrationalPointError,
    NotTorsionPointError,
    SingularCurveError,
    TheoryViolationError,
    UnsupportedCurveError,
)

logger = logging.getLogger(__name__)

Z3_SEXTIC = "432*x^6+648*x^5+945*x^4+1350*x^3+945*x^2+648*x+432"
Z2_SEXTIC = "4*x^6+36*x^5+95*x^4+130*x^3+95*x^2+36*x+4"
Z3_EVEN_SEXTIC = "z^6+80*z^4+125*z^2+50"
Z2_EVEN_SEXTIC = "z^6+10*z^4+25*z^2-100"
# w = 4y/(3*sqrt(3)*(x+1)^3) and w = 4iy/(x+1)^3 enter only through the square of their constants.
Z3_LAMBDA_SQ = Fraction(16, 27)
Z2_LAMBDA_SQ = Fraction(-16)

BV4_COEFFICIENTS = (1, 0, 1, -76, 298)
BA4_COEFFICIENTS = (1, 0, 1, 549, -2202)
J_BV4 = Fraction(-121945, 32)
J_BA4 = Fraction(46969655, 32768)


@dataclass(frozen=True)
class HyperellipticModel:
    """
    The curve y^2 = P(x) for a square-free P of degree 5 or 6.

    Raises:
        - ValueError: If the degree is not 5 or 6.
        - SingularCurveError: If P has a repeated root.
    """

    rhs: Poly

    def __post_init__(self):
        if self.rhs.degree not in (5, 6):
            raise ValueError(f"hyperelliptic model needs degree 5 or 6, got {self.rhs.degree}")
        if poly_gcd(self.rhs, self.rhs.derivative()).degree > 0:
            raise SingularCurveError(f"{self.rhs} has a repeated root")

    @property
    def genus(self) -> int:
        return (self.rhs.degree - 1) // 2


def z3_sextic_resultant() -> Poly:
    """Res_t(3t^2 + 2(x+1)t + x^2 + x + 1, 4t^3 + 3t^2 + 2t + 1), which eliminates t from the Z3 quotient map."""
    x = Poly.gen("x")
    return resultant([x * x + x + 1, 2 * x + 2, 3], [1, 2, 3, 4])


def derive_z3_sextic() -> Poly:
    """
    The branch sextic of the degree 2 map from B/Z3 to the sphere.

    Explanation:
    The two branches of the map are (A +- B*sqrt(r)) / 27 with A = 20x^3 + 15x^2 + 15x + 20, B = 4x^2 + 2x + 4 and
        r = -2x^2 - x - 2. The sextic is the conjugate product A^2 - B^2 * r, computed without radicals. A second
        derivation eliminates t by a resultant; the two must agree up to a nonzero constant.

    Returns:
        - Poly: 432x^6 + 648x^5 + 945x^4 + 1350x^3 + 945x^2 + 648x + 432.

    Raises:
        - TheoryViolationError: If the two derivations disagree.
    """
    a = parse_poly("20*x^3+15*x^2+15*x+20")
    b = parse_poly("4*x^2+2*x+4")
    radicand = parse_poly("-2*x^2-x-2")
    sextic = a * a - b * b * radicand
    eliminated = z3_sextic_resultant()
    if eliminated.is_zero() or eliminated * sextic.lead != sextic * eliminated.lead:
        raise TheoryViolationError(f"resultant {eliminated} is not proportional to {sextic}")
    logger.debug("Z3 sextic %s, resultant scale %s", sextic, eliminated.lead / sextic.lead)
    return sextic


def _eliminate_square(quadratic: tuple[Poly, Poly], cubic: tuple[Poly, Poly]) -> Poly:
    """
    Eliminate s from c_q * s + r_q = 0 and c_c * s + r_c = 0, each relation given as (c, r).

    Raises:
        - TheoryViolationError: If s is not a polynomial in x.
    """
    coefficient, rest = quadratic
    s, remainder = divmod(-rest, coefficient)
    if remainder:
        raise TheoryViolationError(f"{coefficient} does not divide {rest}")
    eliminated = cubic[1] + cubic[0] * s
    if resultant([rest, coefficient], [cubic[1], cubic[0]]) != eliminated * coefficient:
        raise TheoryViolationError("substitution and resultant eliminations disagree")
    return eliminated


def derive_z2_cubics() -> tuple[Poly, Poly]:
    """
    The two cubics whose roots are the branch points of B/Z2 over the line (u2 : u3).

    Explanation:
    In the coordinates u2..u5 the curve is cut out by 3u2^2 + 3u3^2 + 4u2u3 + u4^2 + u5^2 = 0 and
        u2^3 + u3^3 + 4u2^2u3 + 4u2u3^2 - u2u4^2 - u3u5^2 = 0. Branching happens where u4 = 0 or u5 = 0; the other
        square is read off the quadratic relation and substituted into the cubic one, with x = u2/u3.

    Returns:
        - tuple[Poly, Poly]: (x^3 + 7x^2 + 8x + 4, 4x^3 + 8x^2 + 7x + 1).

    Raises:
        - TheoryViolationError: If their product is not the Z2 sextic.
    """
    x = Poly.gen("x")
    one = Poly.constant(1)
    quadratic_rest = parse_poly("3*x^2+4*x+3")
    cubic_rest = parse_poly("x^3+4*x^2+4*x+1")
    # u4 = 0: the cubic relation carries -u3 * u5^2
    first = _eliminate_square((one, quadratic_rest), (-one, cubic_rest))
    # u5 = 0: the cubic relation carries -u2 * u4^2
    second = _eliminate_square((one, quadratic_rest), (-x, cubic_rest))
    if first * second != parse_poly(Z2_SEXTIC):
        raise TheoryViolationError(f"({first})*({second}) differs from {Z2_SEXTIC}")
    return first, second


def substitution_identity(p: Poly, r: Poly, lambda_sq: Fraction) -> IdentityCheck:
    """
    Check lambda_sq * P(x) = (x + 1)^6 * R((x - 1)/(x + 1)) coefficient by coefficient.

    >>> bool(substitution_identity(parse_poly(Z3_SEXTIC), parse_poly(Z3_EVEN_SEXTIC, "z"), Z3_LAMBDA_SQ))
    True
    """
    if p.degree != 6 or r.degree != 6:
        raise ValueError("substitution identity needs two sextics")
    minus, plus = parse_poly("x-1"), parse_poly("x+1")
    rhs = Poly((), "x")
    for k, c in enumerate(r.coeffs):
        rhs = rhs + minus ** k * plus ** (6 - k) * c
    return compare_polys(p * lambda_sq, rhs)


@dataclass(frozen=True)
class QuarticModel:
    """
    The genus 1 curve y^2 = a*x^4 + b*x^3 + c*x^2 + d*x + e.

    Explanation:
    I and J are the classical invariants of the binary quartic. They are properties, so they always reflect
        the stored coefficients.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_poly(cls, p: Poly) -> "QuarticModel":
        if p.degree > 4 or not p.is_real():
            raise ValueError(f"{p} is not a rational quartic")
        e, d, c, b, a = (p.coefficient(k) for k in range(5))
        return cls(a, b, c, d, e)

    @property
    def poly(self) -> Poly:
        return Poly((self.e, self.d, self.c, self.b, self.a))

    @property
    def invariant_i(self) -> Fraction:
        return 12 * self.a * self.e - 3 * self.b * self.d + self.c ** 2

    @property
    def invariant_j(self) -> Fraction:
        a, b, c, d, e = self.a, self.b, self.c, self.d, self.e
        return 72 * a * c * e + 9 * b * c * d - 27 * a * d ** 2 - 27 * e * b ** 2 - 2 * c ** 3


def even_quotient_model(r: Poly) -> QuarticModel:
    """
    Quotient of w^2 = R(z) by z -> -z for R = z^6 + A z^4 + B z^2 + C.

    Explanation:
    With x = z^2 and y = z*w the quotient is y^2 = x(x^3 + A x^2 + B x + C).

    Raises:
        - ValueError: If R has an odd-degree term or degree above 6.
    """
    if r.degree > 6 or any(r.coefficient(k) for k in range(1, 7, 2)):
        raise ValueError(f"{r} is not an even polynomial of degree at most 6")
    return QuarticModel(r.coefficient(6), r.coefficient(4), r.coefficient(2), r.coefficient(0), 0)


def quartic_j(q: QuarticModel) -> Fraction:
    """
    j-invariant of y^2 = quartic, 6912 I^3 / (4 I^3 - J^2).

    >>> quartic_j(QuarticModel(1, 0, 0, 0, 1))
    Fraction(1728, 1)

    Raises:
        - SingularCurveError: If 4 I^3 = J^2.
    """
    i, j = q.invariant_i, q.invariant_j
    denominator = 4 * i ** 3 - j ** 2
    if denominator == 0:
        raise SingularCurveError(f"quartic {q.poly} has a repeated root")
    return 6912 * i ** 3 / denominator


@dataclass(frozen=True)
class RationalPoint:
    """An affine rational point, or the point at infinity when both coordinates are None."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = RationalPoint()


@dataclass(frozen=True)
class WeierstrassInvariants:
    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    discriminant: Fraction
    j: Fraction


@dataclass(frozen=True)
class WeierstrassCurve:
    """
    The elliptic curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.

    Explanation:
    The b and c invariants, the discriminant and j follow the usual formulas. The chord and tangent group
        law is implemented on rational points.

    Args:
        - a1, a2, a3, a4, a6 (Fraction): Coefficients.

    Raises:
        - SingularCurveError: If the discriminant vanishes.
    """

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant == 0:
            raise SingularCurveError(f"singular curve {self.equation()}")

    @classmethod
    def from_coefficients(cls, coefficients: Sequence) -> "WeierstrassCurve":
        return cls(*coefficients)

    @property
    def b2(self) -> Fraction:
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Fraction:
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        return a1 ** 2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 ** 2 - a4 ** 2

    @property
    def c4(self) -> Fraction:
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self) -> Fraction:
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 ** 2 * b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b2 * b4 * b6

    @property
    def j(self) -> Fraction:
        return self.c4 ** 3 / self.discriminant

    def equation(self) -> str:
        lhs = "y^2"
        for coefficient, monomial in ((self.a1, "x*y"), (self.a3, "y")):
            if coefficient == 1:
                lhs += f"+{monomial}"
            elif coefficient == -1:
                lhs += f"-{monomial}"
            elif coefficient:
                sign = "+" if coefficient > 0 else "-"
                lhs += f"{sign}{abs(coefficient)}*{monomial}"
        return f"{lhs} = {Poly((self.a6, self.a4, self.a2, 1))}"

    def contains(self, p: RationalPoint) -> bool:
        if p.is_infinity:
            return True
        x, y = p.x, p.y
        return y ** 2 + self.a1 * x * y + self.a3 * y == x ** 3 + self.a2 * x ** 2 + self.a4 * x + self.a6

    def negate(self, p: RationalPoint) -> RationalPoint:
        if p.is_infinity:
            return p
        return RationalPoint(p.x, -p.y - self.a1 * p.x - self.a3)

    def add(self, p: RationalPoint, q: RationalPoint) -> RationalPoint:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        if p.x == q.x and p.y + q.y + self.a1 * q.x + self.a3 == 0:
            return INFINITY
        if p.x == q.x:
            denominator = 2 * p.y + self.a1 * p.x + self.a3
            slope = (3 * p.x ** 2 + 2 * self.a2 * p.x + self.a4 - self.a1 * p.y) / denominator
            intercept = (-p.x ** 3 + self.a4 * p.x + 2 * self.a6 - self.a3 * p.y) / denominator
        else:
            slope = (q.y - p.y) / (q.x - p.x)
            intercept = (p.y * q.x - q.y * p.x) / (q.x - p.x)
        x3 = slope ** 2 + self.a1 * slope - self.a2 - p.x - q.x
        return RationalPoint(x3, -(slope + self.a1) * x3 - intercept - self.a3)

    def multiply(self, n: int, p: RationalPoint) -> RationalPoint:
        if n < 0:
            return self.multiply(-n, self.negate(p))
        result, addend = INFINITY, p
        while n:
            if n & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            n >>= 1
        return result


def weierstrass_invariants(e: WeierstrassCurve) -> WeierstrassInvariants:
    """
    The b and c invariants, discriminant and j of a curve.

    Raises:
        - TheoryViolationError: If 4 b8 = b2 b6 - b4^2 or 1728 disc = c4^3 - c6^2 fails.
    """
    if 4 * e.b8 != e.b2 * e.b6 - e.b4 ** 2 or 1728 * e.discriminant != e.c4 ** 3 - e.c6 ** 2:
        raise TheoryViolationError(f"inconsistent invariants for {e.equation()}")
    return WeierstrassInvariants(e.b2, e.b4, e.b6, e.b8, e.c4, e.c6, e.discriminant, e.j)


def division_poly_3(e: WeierstrassCurve) -> Poly:
    """psi_3 = 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8; its roots are the abscissas of the 3-torsion points."""
    return Poly((e.b8, 3 * e.b6, 3 * e.b4, e.b2, 3))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: Poly) -> list[Fraction]:
    """
    Distinct rational roots of a rational polynomial, by the rational root test.

    >>> rational_roots(parse_poly("3*x^4+12*x"))
    [Fraction(0, 1)]
    """
    if p.is_zero() or not p.is_real():
        raise ValueError(f"rational root search needs a nonzero rational polynomial, got {p}")
    scale = lcm(*(c.denominator for c in p.coeffs))
    integral = [int(c * scale) for c in p.coeffs]
    roots = set()
    while integral and integral[0] == 0:
        roots.add(Fraction(0))
        integral.pop(0)
    if len(integral) > 1:
        for r in _divisors(integral[0]):
            for s in _divisors(integral[-1]):
                for candidate in (Fraction(r, s), Fraction(-r, s)):
                    if p(candidate) == 0:
                        roots.add(candidate)
    return sorted(roots)


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


def three_torsion_point(e: WeierstrassCurve, x0) -> RationalPoint:
    """
    The rational 3-torsion point above the root x0 of psi_3, taking the larger root of the quadratic in y.

    Raises:
        - NotTorsionPointError: If psi_3(x0) is not 0.
        - IrrationalPointError: If the quadratic in y has no rational root.
    """
    x0 = Fraction(x0)
    if division_poly_3(e)(x0) != 0:
        raise NotTorsionPointError(f"x = {x0} is not a root of psi_3")
    linear = e.a1 * x0 + e.a3
    disc = linear ** 2 + 4 * (x0 ** 3 + e.a2 * x0 ** 2 + e.a4 * x0 + e.a6)
    root = _rational_sqrt(disc)
    if root is None:
        raise IrrationalPointError(x0, disc)
    point = RationalPoint(x0, (-linear + root) / 2)
    if not e.multiply(3, point).is_infinity:
        raise TheoryViolationError(f"{point} is a psi_3 point without order 3")
    return point


def velu_3_isogeny(e: WeierstrassCurve, kernel: RationalPoint) -> WeierstrassCurve:
    """
    Codomain of the 3-isogeny with kernel {O, P, -P}, by Velu's formulas.

    Explanation:
    For P = (x, y): gx = 3x^2 + 2 a2 x + a4 - a1 y, gy = -2y - a1 x - a3, t = 2 gx - a1 gy, u = gy^2 and
        w = u + x t. The codomain keeps a1, a2, a3 and has a4' = a4 - 5t, a6' = a6 - b2 t - 7w.

    Args:
        - e (WeierstrassCurve): Domain curve.
        - kernel (RationalPoint): A generator of the kernel, of exact order 3.

    Returns:
        - WeierstrassCurve: The codomain.

    Raises:
        - NotTorsionPointError: If kernel is not a point of order 3 on e.

    Examples:
        >>> e = WeierstrassCurve(1, 0, 1, -76, 298)
        >>> velu_3_isogeny(e, three_torsion_point(e, 2)).equation()
        'y^2+x*y+y = x^3+549*x-2202'
    """
    if kernel.is_infinity or not e.contains(kernel) or not e.multiply(3, kernel).is_infinity:
        raise NotTorsionPointError(f"{kernel} is not a point of order 3")
    x, y = kernel.x, kernel.y
    gx = 3 * x ** 2 + 2 * e.a2 * x + e.a4 - e.a1 * y
    gy = -2 * y - e.a1 * x - e.a3
    t = 2 * gx - e.a1 * gy
    w = gy ** 2 + x * t
    codomain = WeierstrassCurve(e.a1, e.a2, e.a3, e.a4 - 5 * t, e.a6 - e.b2 * t - 7 * w)
    logger.debug("3-isogeny %s -> %s", e.equation(), codomain.equation())
    return codomain


@dataclass(frozen=True)
class Isogeny:
    """
    An isogeny recorded by its domain, codomain, degree and known kernel points.

    Explanation:
    Only degrees are tracked under dualization and composition; the rational maps are not stored.
    """

    domain: WeierstrassCurve
    codomain: WeierstrassCurve
    degree: int
    kernel: tuple[RationalPoint, ...] = ()

    def dual(self) -> "Isogeny":
        return Isogeny(self.codomain, self.domain, self.degree)

    def then(self, other: "Isogeny") -> "Isogeny":
        """other after self."""
        if other.domain != self.codomain:
            raise ValueError("isogenies do not compose: codomain and domain differ")
        return Isogeny(self.domain, other.codomain, self.degree * other.degree)


def three_isogeny(e: WeierstrassCurve, kernel: RationalPoint) -> Isogeny:
    return Isogeny(e, velu_3_isogeny(e, kernel), 3, (INFINITY, kernel, e.negate(kernel)))


def twist_scale(e1: WeierstrassCurve, e2: WeierstrassCurve) -> Optional[Fraction]:
    """
    The rational u with c4(E2) = u^4 c4(E1) and c6(E2) = u^6 c6(E1), up to sign, or None.

    Raises:
        - UnsupportedCurveError: If j is 0 or 1728.
    """
    if e1.j != e2.j:
        return None
    if e1.j in (0, 1728):
        raise UnsupportedCurveError(f"j = {e1.j} has extra automorphisms")
    u_squared = (e2.c6 * e1.c4) / (e1.c6 * e2.c4)
    u = _rational_sqrt(u_squared)
    if u is None or e2.c4 != u ** 4 * e1.c4 or e2.c6 != u ** 6 * e1.c6:
        return None
    return u


def isomorphic_over_q(e1: WeierstrassCurve, e2: WeierstrassCurve) -> bool:
    return twist_scale(e1, e2) is not None


def reciprocal_symmetry(p: Poly) -> bool:
    """Whether x^6 P(1/x) = P(x), so (x, y) -> (1/x, +-y/x^3) preserve y^2 = P(x)."""
    return p.degree == 6 and p.reversed(6) == p


def cubic_swap(f: Poly, g: Poly) -> bool:
    """Whether x -> 1/x exchanges the roots of two cubics: the reversal of f is proportional to g."""
    if f.degree != 3 or g.degree != 3:
        return False
    reversal = f.reversed(3)
    return reversal * g.lead == g * reversal.lead


def curve_report(e: WeierstrassCurve) -> dict[str, Any]:
    """Equation and invariants of a curve, with exact fractions written as strings."""
    invariants = weierstrass_invariants(e)
    return {"equation": e.equation(), **{name: str(value) for name, value in asdict(invariants).items()}}
