# Description: Ramification profiles of exact rational maps and the decomposition identities of the quotient maps.
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from belyi.dessin import Dessin, passport
from belyi.exact_algebra import (
    IdentityCheck,
    Poly,
    RationalFunction,
    compare_rational,
    compose,
    root_multiplicities,
)

logger = logging.getLogger(__name__)

# name -> (numerator, denominator, variable); every built-in map is parsed from here.
BUILTIN_MAPS: dict[str, tuple[str, str, str]] = {
    "beta_i4_z5": ("-(x-1)^5*(x+1)^5*(x^2-4*x-1)/64", "x^5*(x^2+x-1)", "x"),
    "beta_i4_d10": ("(x-1)^5*((2+i)*x+(2-i))", "(x+1)^5*((2+i)*x-(2-i))", "x"),
    "mobius_g": ("y-i", "i*y-1", "y"),
    "union_g": ("4*y", "(y+1)^2", "y"),
    "d10_pullback": ("(y^2-1)^5*((2+i)*y^2+(2-i))", "(y^2+1)^5*((2+i)*y^2-(2-i))", "y"),
}


def builtin_map(name: str) -> RationalFunction:
    num, den, var = BUILTIN_MAPS[name]
    return RationalFunction.parse(num, den, var)


def beta_i4_z5() -> RationalFunction:
    """The degree 12 Belyi function of I4/Z5."""
    return builtin_map("beta_i4_z5")


def beta_i4_d10() -> RationalFunction:
    """The degree 6 Belyi function of I4/D10, defined over Q(i)."""
    return builtin_map("beta_i4_d10")


def mobius_g() -> RationalFunction:
    """g(y) = (y - i)/(iy - 1), the coordinate change between the two quotient spheres."""
    return builtin_map("mobius_g")


def union_g() -> RationalFunction:
    """g(y) = 4y/(y + 1)^2, which glues a dessin to its dual."""
    return builtin_map("union_g")


@dataclass(frozen=True)
class RamificationProfile:
    """
    Multiplicities of the preimages of 0, 1 and infinity, each sorted in decreasing order.

    Explanation:
    The point at infinity of the source sphere is an ordinary member of exactly one fiber whenever its
        multiplicity is positive.

    Args:
        - over0 (tuple[int, ...]): Fiber over 0.
        - over1 (tuple[int, ...]): Fiber over 1.
        - over_inf (tuple[int, ...]): Fiber over infinity.
    """

    over0: tuple[int, ...]
    over1: tuple[int, ...]
    over_inf: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.over0)

    @property
    def point_count(self) -> int:
        return len(self.over0) + len(self.over1) + len(self.over_inf)

    def is_consistent(self) -> bool:
        return sum(self.over0) == sum(self.over1) == sum(self.over_inf)

    def __str__(self) -> str:
        return profile_report(self)


def _fiber(poly: Poly, degree: int) -> tuple[int, ...]:
    multiplicities = root_multiplicities(poly)
    at_infinity = degree - poly.degree
    if at_infinity > 0:
        multiplicities.append(at_infinity)
    return tuple(sorted(multiplicities, reverse=True))


def ramification_profile(f: RationalFunction) -> RamificationProfile:
    """
    Fibers of f over 0, 1 and infinity.

    Explanation:
    With d = max(deg num, deg den), the fiber over c in {0, 1} consists of the roots of num - c * den, with
        infinity added at multiplicity d - deg(num - c * den) when positive; the fiber over infinity consists of
        the roots of den plus infinity at multiplicity d - deg(den). Multiplicities come from square-free
        decomposition, so no factorization is needed.

    Args:
        - f (RationalFunction): A nonconstant rational function.

    Returns:
        - RamificationProfile: The three fibers.

    Raises:
        - ValueError: If f is constant.

    Examples:
        >>> str(ramification_profile(RationalFunction.parse("x^2")))
        '0: 2 | 1: 1*2 | inf: 2'
    """
    if f.is_constant():
        raise ValueError(f"constant function {f} has no ramification profile")
    d = f.degree
    profile = RamificationProfile(
        over0=_fiber(f.num, d),
        over1=_fiber(f.num - f.den, d),
        over_inf=_fiber(f.den, d),
    )
    logger.debug("profile of %s: %s", f, profile_report(profile))
    return profile


def is_belyi_genus0(f: RationalFunction) -> bool:
    """
    Whether all critical values of f lie in {0, 1, infinity}.

    Explanation:
    By Riemann-Hurwitz on the sphere the total ramification of f is 2d - 2. The three fibers carry all of it
        exactly when they contain d + 2 distinct points in total.
    """
    return ramification_profile(f).point_count == f.degree + 2


def numeric_critical_values(f: RationalFunction) -> list[Optional[complex]]:
    """
    Values of f at its critical points, computed in floating point; None stands for infinity.

    Explanation:
    Finite critical points are the roots of num' * den - num * den'. The point at infinity is critical when
        the same Wronskian of f(1/t) vanishes at t = 0.
    """
    wronskian = f.num.derivative() * f.den - f.num * f.den.derivative()
    values: list[Optional[complex]] = []
    if wronskian.degree > 0:
        num, den = np.poly1d(f.num.complex_coefficients()), np.poly1d(f.den.complex_coefficients())
        for point in np.roots(wronskian.complex_coefficients()):
            denominator = den(point)
            values.append(None if abs(denominator) < 1e-12 else complex(num(point) / denominator))
    at_infinity = compose(f, RationalFunction(Poly.constant(1, "t"), Poly.gen("t")))
    w_infinity = at_infinity.num.derivative() * at_infinity.den - at_infinity.num * at_infinity.den.derivative()
    if w_infinity.is_zero() or w_infinity.coefficient(0) == 0:
        den_zero = at_infinity.den.coefficient(0)
        values.append(None if den_zero == 0 else complex(at_infinity.num.coefficient(0) / den_zero))
    return values


def brute_force_belyi(f: RationalFunction, tol: float = 1e-6) -> bool:
    """Numeric cross-check of ``is_belyi_genus0``: every critical value is close to 0, 1 or infinity."""
    return all(v is None or abs(v) < tol or abs(v - 1) < tol or abs(v) > 1 / tol for v in numeric_critical_values(f))


def matches_dessin(f: RationalFunction, d: Dessin) -> bool:
    """Whether the ramification profile of f equals the passport of d."""
    profile = ramification_profile(f)
    p = passport(d)
    return (profile.over0, profile.over1, profile.over_inf) == (p.black, p.white, p.faces)


def verify_d10_diagram(
    conjugation: Optional[RationalFunction] = None, quotient_map: Optional[RationalFunction] = None
) -> IdentityCheck:
    """
    Exact check of beta_Z5(g(y)) = beta_D10(y^2) over Q(i).

    Explanation:
    The right-hand side is also compared with its stored expanded form. Both arguments exist so that tests can
        substitute a wrong coordinate change or a wrong quotient map.

    Args:
        - conjugation (RationalFunction | None): Replaces g(y) = (y - i)/(iy - 1).
        - quotient_map (RationalFunction | None): Replaces y -> y^2.

    Returns:
        - IdentityCheck: Verdict with the first differing coefficient on failure.
    """
    conjugation = conjugation if conjugation is not None else mobius_g()
    quotient_map = quotient_map if quotient_map is not None else RationalFunction.parse("y^2", var="y")
    lhs = compose(beta_i4_z5(), conjugation)
    rhs = compose(beta_i4_d10(), quotient_map)
    if lhs.degree != rhs.degree:
        return IdentityCheck(False, f"degree {lhs.degree} != {rhs.degree}")
    check = compare_rational(lhs, rhs)
    if not check:
        return check
    if quotient_map == RationalFunction.parse("y^2", var="y"):
        return compare_rational(rhs, builtin_map("d10_pullback"))
    return check


def verify_dual_relation(f: RationalFunction) -> bool:
    """1/f has the profile of f with the fibers over 0 and infinity exchanged."""
    profile = ramification_profile(f)
    dual_profile = ramification_profile(f.reciprocal())
    return (dual_profile.over0, dual_profile.over1, dual_profile.over_inf) == (
        profile.over_inf,
        profile.over1,
        profile.over0,
    )


def compose_with_g(f: RationalFunction) -> RationalFunction:
    """
    The Belyi function 4f/(f + 1)^2 of the union of a dessin with its dual.

    Explanation:
    Its fiber over 1 doubles the multiplicities of the fiber of f over 1; its fiber over infinity, the points
        where f = -1, is all 2's whenever -1 is not a critical value of f.
    """
    return compose(union_g(), f)


def _fiber_text(multiset: tuple[int, ...]) -> str:
    if len(multiset) > 1 and len(set(multiset)) == 1:
        return f"{multiset[0]}*{len(multiset)}"
    return "+".join(map(str, multiset))


def profile_report(profile: RamificationProfile) -> str:
    """
    One-line report of a profile.

    >>> profile_report(RamificationProfile((5, 5, 1, 1), (2,) * 6, (5, 5, 1, 1)))
    '0: 5+5+1+1 | 1: 2*6 | inf: 5+5+1+1'
    """
    return f"0: {_fiber_text(profile.over0)} | 1: {_fiber_text(profile.over1)} | inf: {_fiber_text(profile.over_inf)}"
