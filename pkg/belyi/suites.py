# Description: Acceptance checks grouped into suites, shared by the command line and the HTTP service.
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from belyi.belyi_verify import (
    beta_i4_d10,
    beta_i4_z5,
    compose_with_g,
    is_belyi_genus0,
    matches_dessin,
    profile_report,
    ramification_profile,
    verify_d10_diagram,
    verify_dual_relation,
)
from belyi.bring_numeric import (
    identity_suite,
    repeated_root_check,
    special_points_check,
    z2_branch_points_check,
    z3_branch_points_check,
)
from belyi.config import Settings, get_settings
from belyi.dessin import are_isomorphic, automorphism_group, dual, genus, passport, quotient
from belyi.enums import CheckStatus, SubgroupName, Suite
from belyi.exact_algebra import is_square_up_to_constant, parse_poly
from belyi.icosa_catalog import (
    EXPECTED_GENERA,
    TRIANGLES,
    build_i0,
    build_i4,
    check_triangle,
    diagram_edges,
    embed_subgroup,
    quotient_family,
    subgroup_spec,
)
from belyi.quotient_curves import (
    BA4_COEFFICIENTS,
    BV4_COEFFICIENTS,
    J_BA4,
    J_BV4,
    Z2_EVEN_SEXTIC,
    Z2_LAMBDA_SQ,
    Z2_SEXTIC,
    Z3_EVEN_SEXTIC,
    Z3_LAMBDA_SQ,
    Z3_SEXTIC,
    WeierstrassCurve,
    cubic_swap,
    derive_z2_cubics,
    derive_z3_sextic,
    division_poly_3,
    even_quotient_model,
    isomorphic_over_q,
    quartic_j,
    rational_roots,
    reciprocal_symmetry,
    substitution_identity,
    three_torsion_point,
    velu_3_isogeny,
)

logger = logging.getLogger(__name__)

CheckOutcome = tuple[bool, dict[str, Any]]


@dataclass
class CheckResult:
    """
    Outcome of one named check.

    Args:
        - name (str): Check title.
        - status (CheckStatus): pass, fail or error.
        - details (dict[str, Any]): Values, residuals or the error message.
        - wall_time (float): Seconds spent.
    """

    name: str
    status: CheckStatus
    details: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "status": self.status.value, "details": self.details, "wall_time": self.wall_time}


@dataclass
class VerificationReport:
    """All check results of one suite run, in a fixed order; it passes iff every check passes."""

    suite: Suite
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.status == CheckStatus.PASS for check in self.checks)

    def as_dict(self) -> dict[str, Any]:
        return {"suite": self.suite.value, "passed": self.passed, "checks": [c.as_dict() for c in self.checks]}

    def text(self) -> str:
        lines = [f"{check.name} {check.status.value.upper()}" for check in self.checks]
        lines.append(f"{self.suite.value}: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def check_i4_structure(settings: Settings) -> CheckOutcome:
    i4 = build_i4()
    group = automorphism_group(i4)
    p = passport(i4)
    passed = p.compact() == "[5^12|2^30|5^12]" and genus(i4) == 4 and group.order == 60
    passed = passed and group.is_fixed_point_free()
    return passed, {"passport": p.compact(), "genus": genus(i4), "automorphisms": group.order}


def check_i0_structure(settings: Settings) -> CheckOutcome:
    i0, i4 = build_i0(), build_i4()
    p = passport(i0)
    passed = p.compact() == "[5^12|2^30|3^20]" and genus(i0) == 0 and i4.sigma == i0.sigma * i0.sigma
    return passed, {"passport": p.compact(), "genus": genus(i0)}


def check_quotient_genera(settings: Settings) -> CheckOutcome:
    nodes = quotient_family()
    genera = {node.spec.name.value: node.genus for node in nodes}
    expected = {name.value: g for name, g in EXPECTED_GENERA.items()}
    riemann_hurwitz = all(node.riemann_hurwitz.holds for node in nodes)
    return genera == expected and riemann_hurwitz, {"genera": genera, "riemann_hurwitz": riemann_hurwitz}


def check_self_duality(settings: Settings) -> CheckOutcome:
    i4 = build_i4()
    isomorphic = are_isomorphic(i4, dual(i4))
    return isomorphic, {"isomorphic": isomorphic}


def check_triangles(settings: Settings) -> CheckOutcome:
    details = {}
    passed = True
    for inner, outer in TRIANGLES:
        result = check_triangle(subgroup_spec(inner), subgroup_spec(outer))
        details[f"{inner.value}<{outer.value}"] = {"commutes": result.isomorphic, "index": result.index,
                                                   "branch_free": result.branch_free}
        passed = passed and result.isomorphic
        if (inner, outer) == (SubgroupName.V4, SubgroupName.A4):
            passed = passed and result.index == 3 and result.branch_free
    return passed, details


def check_diagram(settings: Settings) -> CheckOutcome:
    edges = diagram_edges()
    rendered = [f"{e.source.value}->{e.target.value}:{e.index}" for e in edges]
    return len(edges) == 13, {"edges": rendered}


def _quotient_of_i4(name: SubgroupName):
    return quotient(build_i4(), embed_subgroup(subgroup_spec(name)))


def check_beta_z5(settings: Settings) -> CheckOutcome:
    f = beta_i4_z5()
    square, _, _ = is_square_up_to_constant(f.num - f.den)
    belyi = is_belyi_genus0(f)
    matches = matches_dessin(f, _quotient_of_i4(SubgroupName.Z5))
    details = {"profile": profile_report(ramification_profile(f)), "degree": f.degree, "belyi": belyi,
               "matches_quotient": matches, "white_fiber_square": square}
    return belyi and matches and square and f.degree == 12, details


def check_beta_d10(settings: Settings) -> CheckOutcome:
    f = beta_i4_d10()
    belyi = is_belyi_genus0(f)
    matches = matches_dessin(f, _quotient_of_i4(SubgroupName.D10))
    details = {"profile": profile_report(ramification_profile(f)), "degree": f.degree, "belyi": belyi,
               "matches_quotient": matches}
    return belyi and matches and f.degree == 6, details


def check_d10_diagram(settings: Settings) -> CheckOutcome:
    result = verify_d10_diagram()
    return result.holds, {"detail": result.detail}


def check_dual_relation(settings: Settings) -> CheckOutcome:
    verdicts = {"beta_i4_z5": verify_dual_relation(beta_i4_z5()), "beta_i4_d10": verify_dual_relation(beta_i4_d10())}
    return all(verdicts.values()), verdicts


def check_union_map(settings: Settings) -> CheckOutcome:
    f = beta_i4_z5()
    union = compose_with_g(f)
    profile, base = ramification_profile(union), ramification_profile(f)
    doubled = profile.over1 == tuple(sorted((2 * m for m in base.over1), reverse=True))
    belyi = is_belyi_genus0(union)
    return belyi and doubled and union.degree == 24, {"profile": profile_report(profile), "degree": union.degree}


def check_z3_sextic(settings: Settings) -> CheckOutcome:
    sextic = derive_z3_sextic()
    passed = sextic == parse_poly(Z3_SEXTIC) and reciprocal_symmetry(sextic)
    return passed, {"sextic": str(sextic)}


def check_z2_cubics(settings: Settings) -> CheckOutcome:
    first, second = derive_z2_cubics()
    passed = (
        first == parse_poly("x^3+7*x^2+8*x+4")
        and second == parse_poly("4*x^3+8*x^2+7*x+1")
        and first * second == parse_poly(Z2_SEXTIC)
        and cubic_swap(first, second)
    )
    return passed, {"cubics": [str(first), str(second)]}


def check_substitutions(settings: Settings) -> CheckOutcome:
    z3 = substitution_identity(parse_poly(Z3_SEXTIC), parse_poly(Z3_EVEN_SEXTIC, "z"), Z3_LAMBDA_SQ)
    z2 = substitution_identity(parse_poly(Z2_SEXTIC), parse_poly(Z2_EVEN_SEXTIC, "z"), Z2_LAMBDA_SQ)
    return bool(z3) and bool(z2), {"Z3": z3.holds, "Z2": z2.holds, "detail": z3.detail or z2.detail}


def check_j_invariants(settings: Settings) -> CheckOutcome:
    j_s3 = quartic_j(even_quotient_model(parse_poly(Z3_EVEN_SEXTIC, "z")))
    j_v4 = quartic_j(even_quotient_model(parse_poly(Z2_EVEN_SEXTIC, "z")))
    j_weierstrass = WeierstrassCurve.from_coefficients(BV4_COEFFICIENTS).j
    passed = j_s3 == j_v4 == j_weierstrass == J_BV4
    return passed, {"S3": str(j_s3), "V4": str(j_v4), "weierstrass": str(j_weierstrass)}


def check_isogeny(settings: Settings) -> CheckOutcome:
    domain = WeierstrassCurve.from_coefficients(BV4_COEFFICIENTS)
    expected = WeierstrassCurve.from_coefficients(BA4_COEFFICIENTS)
    roots = rational_roots(division_poly_3(domain))
    point = three_torsion_point(domain, roots[0])
    codomain = velu_3_isogeny(domain, point)
    passed = isomorphic_over_q(codomain, expected) and codomain.j == J_BA4
    return passed, {"psi3_roots": [str(r) for r in roots], "kernel": str(point), "codomain": codomain.equation(),
                    "j": str(codomain.j)}


def check_bring_identities(settings: Settings) -> CheckOutcome:
    report = identity_suite(settings.samples, settings.seed, settings.tolerance)
    return report.passed, {"samples": report.samples, "seed": report.seed, "max_residuals": report.max_residuals,
                           "failures": report.failures[:10]}


def check_special_points(settings: Settings) -> CheckOutcome:
    results = special_points_check(settings.tolerance)
    return all(entry["passed"] for entry in results.values()), results


def check_repeated_roots(settings: Settings) -> CheckOutcome:
    residuals = repeated_root_check(tol=settings.tolerance)
    return max(residuals.values()) <= settings.tolerance, residuals


def check_branch_points(settings: Settings) -> CheckOutcome:
    residuals = {"Z3": z3_branch_points_check(settings.tolerance), "Z2": z2_branch_points_check(settings.tolerance)}
    return max(residuals.values()) <= settings.tolerance, residuals


SUITE_CHECKS: dict[Suite, list[tuple[str, Callable[[Settings], CheckOutcome]]]] = {
    Suite.CATALOG: [
        ("I4 passport [5^12|2^30|5^12], genus 4, |Aut| = 60", check_i4_structure),
        ("I0 passport [5^12|2^30|3^20], genus 0", check_i0_structure),
        ("quotient genera e:4 Z2:2 Z3:2 V4:1 Z5:0 S3:1 D10:0 A4:1 A5:0", check_quotient_genera),
        ("I4 isomorphic to its dual", check_self_duality),
        ("quotient triangles commute", check_triangles),
        ("quotient diagram has 13 arrows", check_diagram),
    ],
    Suite.BELYI: [
        ("beta(I4/Z5) is Belyi with the quotient passport", check_beta_z5),
        ("beta(I4/D10) is Belyi with the quotient passport", check_beta_d10),
        ("beta(I4/Z5) o g = beta(I4/D10) o y^2", check_d10_diagram),
        ("1/beta realizes the dual dessin", check_dual_relation),
        ("4 beta/(beta+1)^2 is Belyi of degree 24", check_union_map),
    ],
    Suite.CURVES: [
        ("Z3 sextic by conjugate product and resultant", check_z3_sextic),
        ("Z2 cubics by elimination", check_z2_cubics),
        ("substitution identities for Z3 and Z2", check_substitutions),
        ("j(B/V4) = j(B/S3) = -121945/32", check_j_invariants),
        ("3-isogeny B/V4 -> B/A4", check_isogeny),
    ],
    Suite.BRING: [
        ("Bring identities on random points", check_bring_identities),
        ("beta at vertex, white vertex and face center", check_special_points),
        ("beta = -1 on repeated-root points", check_repeated_roots),
        ("Z3 and Z2 branch points", check_branch_points),
    ],
}


def suite_checks(suite: Suite) -> list[tuple[str, Callable[[Settings], CheckOutcome]]]:
    if suite == Suite.ALL:
        return [check for part in (Suite.CATALOG, Suite.BELYI, Suite.CURVES, Suite.BRING) for check in SUITE_CHECKS[part]]
    return SUITE_CHECKS[suite]


def run_check(name: str, check: Callable[[Settings], CheckOutcome], settings: Settings) -> CheckResult:
    """Run one check, turning exceptions into an error result."""
    start = time.perf_counter()
    try:
        passed, details = check(settings)
        status = CheckStatus.PASS if passed else CheckStatus.FAIL
    except Exception as e:
        logger.exception("check %r raised", name)
        status, details = CheckStatus.ERROR, {"error": f"{type(e).__name__}: {e}"}
    result = CheckResult(name, status, details, time.perf_counter() - start)
    if status != CheckStatus.PASS:
        logger.warning("%s: %s", name, status.value)
    return result


def run_suite(suite: Suite, settings: Optional[Settings] = None) -> VerificationReport:
    """
    Run every check of a suite in its fixed order.

    Args:
        - suite (Suite): The suite, or ``Suite.ALL`` for every check.
        - settings (Settings | None): Tolerance, samples and seed. Defaults to ``get_settings()``.

    Returns:
        - VerificationReport: The ordered results.
    """
    settings = settings or get_settings()
    report = VerificationReport(suite=suite)
    for name, check in suite_checks(suite):
        report.checks.append(run_check(name, check, settings))
    logger.info("suite %s: %s", suite.value, "PASS" if report.passed else "FAIL")
    return report
