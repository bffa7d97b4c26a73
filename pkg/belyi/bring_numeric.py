# Description: Floating-point sampling of Bring's curve and numeric checks of its degree 60 Belyi functions.
#
# A point is an ordered 5-tuple of roots of x^5 + a*x + b, which satisfies p1 = p2 = p3 = 0.
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Optional, Sequence

import numpy as np

from belyi.exact_algebra import Poly, parse_poly
from belyi.exceptions import DegeneratePointError, NonConvergenceError
from belyi.perm_core import Permutation, symmetric_group
from belyi.quotient_curves import Z3_SEXTIC

logger = logging.getLogger(__name__)

SQRT5 = np.sqrt(5.0)
ZETA5 = np.exp(2j * np.pi / 5)
MAX_NEWTON_STEPS = 50
MIN_DISCRIMINANT = 1e-6
SAMPLE_BOX = 2.0


@dataclass(frozen=True)
class SphereValue:
    """A point of the Riemann sphere: a complex number, or infinity when ``value`` is None."""

    value: Optional[complex] = None

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def reciprocal(self) -> "SphereValue":
        if self.is_infinity:
            return SphereValue(0j)
        if self.value == 0:
            return SphereValue(None)
        return SphereValue(1 / self.value)

    def distance(self, other: "SphereValue") -> float:
        """Chordal distance; 2 between antipodes."""
        if self.is_infinity and other.is_infinity:
            return 0.0
        if self.is_infinity or other.is_infinity:
            z = other.value if self.is_infinity else self.value
            return float(2 / np.sqrt(1 + abs(z) ** 2))
        z, w = self.value, other.value
        return float(2 * abs(z - w) / np.sqrt((1 + abs(z) ** 2) * (1 + abs(w) ** 2)))

    def __str__(self) -> str:
        return "inf" if self.is_infinity else f"{self.value:.12g}"


INFINITY = SphereValue(None)


def sphere_quotient(num: complex, den: complex, tol: float) -> SphereValue:
    """
    num/den on the sphere with tolerance-based snapping to 0 and infinity.

    Raises:
        - DegeneratePointError: If both num and den vanish within tol.
    """
    scale = abs(num) + abs(den)
    if scale <= tol:
        raise DegeneratePointError(f"indeterminate 0/0 with |num| = {abs(num):.3g}, |den| = {abs(den):.3g}")
    if abs(den) < tol * scale:
        return INFINITY
    if abs(num) < tol * scale:
        return SphereValue(0j)
    return SphereValue(complex(num / den))


def union_map(beta: SphereValue, tol: float) -> SphereValue:
    """4w/(w + 1)^2 on the sphere."""
    if beta.is_infinity:
        return SphereValue(0j)
    return sphere_quotient(4 * beta.value, (beta.value + 1) ** 2, tol)


ProjectivePair = tuple[complex, complex]


def projective_distance(first: ProjectivePair, second: ProjectivePair) -> float:
    """
    Chordal distance between [n1 : d1] and [n2 : d2], computed without rounding either to 0 or infinity.

    Raises:
        - DegeneratePointError: If either pair is (0, 0).
    """
    (n1, d1), (n2, d2) = first, second
    norm = np.sqrt((abs(n1) ** 2 + abs(d1) ** 2) * (abs(n2) ** 2 + abs(d2) ** 2))
    if norm == 0:
        raise DegeneratePointError("the pair (0, 0) is not a point of the sphere")
    return float(2 * abs(n1 * d2 - n2 * d1) / norm)


def union_pair(pair: ProjectivePair) -> ProjectivePair:
    """[4nd : (n + d)^2], the union map 4w/(w + 1)^2 in homogeneous form."""
    n, d = pair
    return 4 * n * d, (n + d) ** 2


@dataclass(frozen=True)
class BringPoint:
    """
    An ordered 5-tuple of complex coordinates on Bring's curve.

    Explanation:
    a and b are the coefficients of x^5 + a*x + b having the coordinates as roots, so a = e4 and b = -e5.
        D = sqrt(5) * prod_{i<j}(x_i - x_j) depends on the order of the coordinates and changes sign under odd
        permutations.

    Args:
        - coords (tuple[complex, ...]): Five coordinates.
    """

    coords: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coords) != 5:
            raise ValueError(f"a Bring point has 5 coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(complex(c) for c in self.coords))

    @cached_property
    def _monic(self) -> np.ndarray:
        return np.poly(np.array(self.coords))

    @property
    def a(self) -> complex:
        return complex(self._monic[4])

    @property
    def b(self) -> complex:
        return complex(self._monic[5])

    @cached_property
    def radical(self) -> complex:
        product = 1 + 0j
        for i in range(5):
            for j in range(i + 1, 5):
                product *= self.coords[i] - self.coords[j]
        return complex(SQRT5 * product)

    def power_sum(self, k: int) -> complex:
        return complex(sum(x ** k for x in self.coords))

    def power_sum_residual(self) -> float:
        scale = max(1.0, max(abs(x) for x in self.coords))
        return max(abs(self.power_sum(k)) / scale ** k for k in (1, 2, 3))

    def permuted(self, perm: Permutation) -> "BringPoint":
        """The point whose i-th coordinate is the perm(i)-th coordinate of this one."""
        return BringPoint(tuple(self.coords[perm(i) - 1] for i in range(1, 6)))


def solve_bring_quintic(a: complex, b: complex, tol: float = 1e-8) -> list[complex]:
    """
    The five roots of x^5 + a*x + b.

    Explanation:
    Companion-matrix eigenvalues from numpy give starting values; each is polished by Newton steps until
        |p(x)| <= tol * max(1, |a|, |b|).

    Args:
        - a (complex): Linear coefficient.
        - b (complex): Constant coefficient.
        - tol (float): Relative residual target. Defaults to 1e-8.

    Returns:
        - list[complex]: The roots, in the eigenvalue solver's order.

    Raises:
        - ValueError: If a = b = 0.
        - NonConvergenceError: If a root misses the residual target after the step cap.
    """
    if a == 0 and b == 0:
        raise ValueError("x^5 has a single root of multiplicity 5")
    coefficients = np.array([1, 0, 0, 0, a, b], dtype=complex)
    derivative = np.polyder(coefficients)
    target = tol * max(1.0, abs(a), abs(b))
    roots = []
    for z in np.roots(coefficients):
        for _ in range(MAX_NEWTON_STEPS):
            value = np.polyval(coefficients, z)
            if abs(value) <= target:
                break
            slope = np.polyval(derivative, z)
            if slope == 0:
                break
            z = z - value / slope
        if abs(np.polyval(coefficients, z)) > target:
            raise NonConvergenceError(f"root near {z} of x^5 + ({a})x + ({b}) did not converge")
        roots.append(complex(z))
    return roots


def bring_point(a: complex, b: complex, tol: float = 1e-8) -> BringPoint:
    return BringPoint(tuple(solve_bring_quintic(a, b, tol)))


def beta_i4(p: BringPoint, tol: float = 1e-8) -> SphereValue:
    """
    The Belyi function of I4 in the form -(125 b^2 + D)/(125 b^2 - D).

    Explanation:
    Since D^2 = 5(256 a^5 + 3125 b^4), the product (125 b^2 + D)(125 b^2 - D) equals -1280 a^5, so this form
        agrees with the version having a^5 in the denominator and stays regular where a = 0.

    Raises:
        - DegeneratePointError: If numerator and denominator both vanish.
    """
    return sphere_quotient(*beta_i4_pair(p), tol)


def beta_i4_pair(p: BringPoint) -> ProjectivePair:
    square = 125 * p.b ** 2
    return -(square + p.radical), square - p.radical


def beta_h(p: BringPoint, tol: float = 1e-8) -> SphereValue:
    """256 a^5 / (256 a^5 + 3125 b^4), the Belyi function of I4 together with its dual."""
    return sphere_quotient(*beta_h_pair(p), tol)


def beta_h_pair(p: BringPoint) -> ProjectivePair:
    numerator = 256 * p.a ** 5
    return numerator, numerator + 3125 * p.b ** 4


def regularization_residual(p: BringPoint) -> float:
    """Relative defect of (125 b^2 + D)(125 b^2 - D) = -1280 a^5."""
    square = 125 * p.b ** 2
    lhs = (square + p.radical) * (square - p.radical)
    scale = max(1.0, abs(square) ** 2, abs(p.radical) ** 2)
    return abs(lhs + 1280 * p.a ** 5) / scale


def sample_coefficients(rng: np.random.Generator) -> tuple[complex, complex]:
    """Uniform a, b in the box [-2, 2]^2, away from the discriminant locus."""
    while True:
        a = complex(*rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, 2))
        b = complex(*rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, 2))
        if abs(256 * a ** 5 + 3125 * b ** 4) >= MIN_DISCRIMINANT:
            return a, b


EVEN_PERMUTATIONS = (
    Permutation.from_cycles([[1, 2, 3, 4, 5]], 5),
    Permutation.from_cycles([[1, 2, 3]], 5),
)
ODD_PERMUTATIONS = (
    Permutation.from_cycles([[1, 2]], 5),
    Permutation.from_cycles([[2, 3, 4, 5]], 5),
)


@dataclass
class BringReport:
    """
    Maximum residual per identity over all samples, and the samples that exceeded the tolerance.
    """

    samples: int
    seed: int
    tolerance: float
    max_residuals: dict[str, float] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)

    def record(self, name: str, residual: float, sample: int, point: Optional[BringPoint] = None) -> None:
        self.max_residuals[name] = max(self.max_residuals.get(name, 0.0), residual)
        if residual > self.tolerance:
            failure = {"identity": name, "sample": sample, "residual": residual}
            if point is not None:
                failure["a"], failure["b"] = str(point.a), str(point.b)
            self.failures.append(failure)
            logger.warning("identity %s fails on sample %d: residual %.3g", name, sample, residual)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_residual(self) -> float:
        return max(self.max_residuals.values(), default=0.0)


def identity_suite(samples: int = 100, seed: int = 1, tol: float = 1e-8) -> BringReport:
    """
    Check the relations of the two Belyi functions on random points of Bring's curve.

    Explanation:
    For every sample: the power sums p1, p2, p3 vanish; the regularized form of beta is consistent;
        beta_H = 4 beta/(beta + 1)^2; beta is invariant under even permutations of the coordinates and becomes
        1/beta under odd ones; a and b are unchanged by permutations. Distances are chordal and taken between
        homogeneous (numerator, denominator) pairs, so values near 0 or infinity are never rounded first.

    Args:
        - samples (int): Number of random points. Defaults to 100.
        - seed (int): Seed of numpy's default generator. Defaults to 1.
        - tol (float): Residual bound. Defaults to 1e-8.

    Returns:
        - BringReport: Maximum residuals and failures.
    """
    rng = np.random.default_rng(seed)
    report = BringReport(samples=samples, seed=seed, tolerance=tol)
    for index in range(samples):
        a, b = sample_coefficients(rng)
        point = bring_point(a, b, tol)
        beta = beta_i4_pair(point)
        report.record("power_sums", point.power_sum_residual(), index, point)
        report.record("regularized_beta", regularization_residual(point), index, point)
        report.record("beta_h_union", projective_distance(beta_h_pair(point), union_pair(beta)), index, point)
        for perm in EVEN_PERMUTATIONS + ODD_PERMUTATIONS:
            moved = point.permuted(perm)
            report.record("coefficient_invariance", abs(moved.a - point.a) + abs(moved.b - point.b), index, point)
            if perm.sign() == 1:
                report.record("even_invariance", projective_distance(beta_i4_pair(moved), beta), index, point)
            else:
                reciprocal = (beta[1], beta[0])
                report.record("odd_reciprocal", projective_distance(beta_i4_pair(moved), reciprocal), index, point)
    logger.info("Bring identity suite: %d samples, max residual %.3g", samples, report.max_residual)
    return report


def permutation_split(point: BringPoint, tol: float = 1e-8) -> tuple[int, int]:
    """
    Over all 120 coordinate permutations, how many give beta and how many give 1/beta.

    On a point where beta is not +-1 both counts are 60.
    """
    beta = beta_i4(point, tol)
    same = reciprocal = 0
    for perm in symmetric_group(5):
        value = beta_i4(point.permuted(perm), tol)
        if value.distance(beta) <= tol:
            same += 1
        elif value.distance(beta.reciprocal()) <= tol:
            reciprocal += 1
    return same, reciprocal


def vertex_point() -> BringPoint:
    return BringPoint(tuple(ZETA5 ** k for k in range(5)))


def white_point() -> BringPoint:
    return BringPoint((0, 1, -1, 1j, -1j))


def face_point() -> BringPoint:
    return BringPoint((ZETA5, 1, ZETA5 ** 2, ZETA5 ** 3, ZETA5 ** 4))


def special_points_check(tol: float = 1e-8) -> dict[str, dict[str, Any]]:
    """
    beta at a black vertex, a white vertex and a face center of I4: 0, 1 and infinity.

    >>> all(entry["passed"] for entry in special_points_check().values())
    True
    """
    cases = {
        "vertex": (vertex_point(), SphereValue(0j)),
        "white": (white_point(), SphereValue(1 + 0j)),
        "face": (face_point(), INFINITY),
    }
    results = {}
    for name, (point, expected) in cases.items():
        value = beta_i4(point, tol)
        residual = value.distance(expected)
        results[name] = {"expected": str(expected), "value": str(value), "residual": residual, "passed": residual <= tol}
    return results


def _cubic_roots(r: complex) -> np.ndarray:
    return np.roots([1, 2 * r, 3 * r ** 2, 4 * r ** 3])


def repeated_root_point(r: complex = 1.0) -> BringPoint:
    """
    The point (c1, c2, c3, r, r), where x^5 - 5 r^4 x + 4 r^5 = (x - r)^2 (x^3 + 2r x^2 + 3r^2 x + 4r^3).

    Raises:
        - ValueError: If r is 0.
    """
    if r == 0:
        raise ValueError("the repeated-root family needs r != 0")
    c1, c2, c3 = _cubic_roots(r)
    return BringPoint((c1, c2, c3, r, r))


def repeated_root_check(radii: Sequence[complex] = (1.0, 0.5 + 0.5j, -1.5), tol: float = 1e-8) -> dict[str, float]:
    """Residuals of beta = -1 and beta_H = infinity on points with a repeated coordinate."""
    beta_residual = union_residual = 0.0
    for r in radii:
        point = repeated_root_point(r)
        beta_residual = max(beta_residual, beta_i4(point, tol).distance(SphereValue(-1 + 0j)))
        union_residual = max(union_residual, beta_h(point, tol).distance(INFINITY))
    return {"beta_minus_one": beta_residual, "beta_h_infinity": union_residual}


def _relative_value(poly: Poly, z: complex) -> float:
    coefficients = poly.complex_coefficients()
    scale = sum(abs(c) for c in coefficients) * max(1.0, abs(z)) ** poly.degree
    return abs(np.polyval(coefficients, z)) / scale


def z3_branch_points_check(tol: float = 1e-8) -> float:
    """
    Largest relative value of the Z3 branch sextic at the ratios c_i/c_j of the roots of c^3 + 2c^2 + 3c + 4.

    These ratios are where two coordinates of a Z3-fixed configuration collide.
    """
    sextic = parse_poly(Z3_SEXTIC)
    roots = _cubic_roots(1.0)
    residual = max(_relative_value(sextic, roots[i] / roots[j]) for i in range(3) for j in range(3) if i != j)
    if residual > tol:
        logger.warning("Z3 branch points miss the sextic by %.3g", residual)
    return residual


def z2_branch_points_check(tol: float = 1e-8) -> float:
    """
    Largest relative value of the Z2 branch cubics at 2/(c_i + c_j) and (c_i + c_j)/2.

    With r = 1, these are the values of u2/u3 where u4 = 0 and where u5 = 0.
    """
    first, second = parse_poly("x^3+7*x^2+8*x+4"), parse_poly("4*x^3+8*x^2+7*x+1")
    roots = _cubic_roots(1.0)
    residuals = []
    for i in range(3):
        for j in range(i + 1, 3):
            total = roots[i] + roots[j]
            residuals.append(_relative_value(first, 2 / total))
            residuals.append(_relative_value(second, total / 2))
    residual = max(residuals)
    if residual > tol:
        logger.warning("Z2 branch points miss the cubics by %.3g", residual)
    return residual
