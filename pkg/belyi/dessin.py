# Description: Dessins d'enfants as permutation pairs acting on darts.
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import Any, Optional, Sequence, Union

from belyi.exceptions import NotAutomorphismError, NotTransitiveError, TheoryViolationError
from belyi.perm_core import (
    PermGroup,
    Permutation,
    centralizer_in_sym,
    cycle_type,
    find_isomorphism,
    is_transitive,
    orbits,
)
from belyi.schemas import DessinDocument

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Passport:
    """
    Degree multisets of black vertices, white vertices and faces, each sorted in decreasing order.

    >>> str(Passport((5, 1), (2, 2, 1, 1), (5, 1)))
    '{5,1|2,2,1,1|5,1}'
    """

    black: tuple[int, ...]
    white: tuple[int, ...]
    faces: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.black)

    def as_lists(self) -> dict[str, list[int]]:
        return {"black": list(self.black), "white": list(self.white), "faces": list(self.faces)}

    def compact(self) -> str:
        """Exponent notation, e.g. ``[5^12|2^30|5^12]``."""

        def part(multiset: tuple[int, ...]) -> str:
            runs = [(value, len(list(group))) for value, group in groupby(multiset)]
            return ",".join(f"{value}^{count}" if count > 1 else str(value) for value, count in runs)

        return f"[{part(self.black)}|{part(self.white)}|{part(self.faces)}]"

    def __str__(self) -> str:
        return "{" + "|".join(",".join(map(str, m)) for m in (self.black, self.white, self.faces)) + "}"


@dataclass(frozen=True)
class Dessin:
    """
    A dessin d'enfant given by the rotations around its black and white vertices.

    Explanation:
    Darts are labelled 1..n. The group generated by sigma and alpha must act transitively, otherwise the
        pair describes a disconnected map. The face permutation is (sigma * alpha)^-1.

    Args:
        - sigma (Permutation): Rotation around black vertices.
        - alpha (Permutation): Rotation around white vertices.

    Raises:
        - ValueError: If the permutations have different degrees.
        - NotTransitiveError: If the pair does not generate a transitive group.
    """

    sigma: Permutation
    alpha: Permutation

    def __post_init__(self):
        if self.sigma.degree != self.alpha.degree:
            raise ValueError(f"degree mismatch: sigma on {self.sigma.degree}, alpha on {self.alpha.degree}")
        if not is_transitive([self.sigma, self.alpha], self.sigma.degree):
            raise NotTransitiveError(orbits([self.sigma, self.alpha], self.sigma.degree))

    @property
    def n_darts(self) -> int:
        return self.sigma.degree

    @property
    def phi(self) -> Permutation:
        return (self.sigma * self.alpha).inverse()


def new_dessin(sigma: Permutation, alpha: Permutation) -> Dessin:
    """Validate and build a dessin from a permutation pair."""
    dessin = Dessin(sigma, alpha)
    logger.debug("dessin on %d darts: sigma=%s alpha=%s", dessin.n_darts, sigma, alpha)
    return dessin


def passport(d: Dessin) -> Passport:
    return Passport(cycle_type(d.sigma), cycle_type(d.alpha), cycle_type(d.phi))


def genus(d: Dessin) -> int:
    """
    Genus from Euler's formula V - E + F = 2 - 2g, with V = #black + #white and E = n.

    Raises:
        - TheoryViolationError: If the Euler characteristic is odd or above 2.
    """
    p = passport(d)
    euler = len(p.black) + len(p.white) - d.n_darts + len(p.faces)
    if euler % 2 or euler > 2:
        raise TheoryViolationError(f"impossible Euler characteristic {euler}")
    return (2 - euler) // 2


def automorphism_group(d: Dessin) -> PermGroup:
    """The permutations of darts commuting with sigma and alpha; they act freely."""
    return centralizer_in_sym([d.sigma, d.alpha], d.n_darts)


def _group_generators(group: Union[PermGroup, Sequence[Permutation]]) -> list[Permutation]:
    if isinstance(group, PermGroup):
        return list(group.generators or group.elements)
    return list(group)


def quotient_with_map(d: Dessin, group: Union[PermGroup, Sequence[Permutation]]) -> tuple[Dessin, list[int]]:
    """
    Quotient of a dessin by a group of its automorphisms, with the projection of darts to classes.

    Explanation:
    The darts of the quotient are the orbits of the group, labelled 1..m in the order of their smallest
        original dart. The induced rotations send the class of e to the class of sigma(e) and alpha(e), which
        is well defined because every element commutes with both rotations.

    Args:
        - d (Dessin): The covering dessin.
        - group (PermGroup | Sequence[Permutation]): A group of automorphisms, or generators of one.

    Returns:
        - tuple[Dessin, list[int]]: The quotient dessin and, for each original dart 1..n, its 1-based class.

    Raises:
        - NotAutomorphismError: If some generator does not commute with sigma and alpha.
    """
    gens = _group_generators(group)
    for g in gens:
        if g.degree != d.n_darts:
            raise NotAutomorphismError(f"{g} acts on {g.degree} points, dessin has {d.n_darts} darts")
        if g * d.sigma != d.sigma * g or g * d.alpha != d.alpha * g:
            raise NotAutomorphismError(f"{g} is not an automorphism of the dessin")
    classes = orbits(gens, d.n_darts) if gens else [[e] for e in range(1, d.n_darts + 1)]
    class_of = [0] * (d.n_darts + 1)
    for index, orbit in enumerate(classes, start=1):
        for dart in orbit:
            class_of[dart] = index
    sigma_bar = Permutation.from_images([class_of[d.sigma(orbit[0])] for orbit in classes])
    alpha_bar = Permutation.from_images([class_of[d.alpha(orbit[0])] for orbit in classes])
    result = Dessin(sigma_bar, alpha_bar)
    logger.debug("quotient of %d darts by %d generators has %d darts", d.n_darts, len(gens), result.n_darts)
    return result, class_of[1:]


def quotient(d: Dessin, group: Union[PermGroup, Sequence[Permutation]]) -> Dessin:
    return quotient_with_map(d, group)[0]


def dual(d: Dessin) -> Dessin:
    """The dual dessin (phi, alpha): black vertices and faces exchange roles."""
    return Dessin(d.phi, d.alpha)


def isomorphism(d1: Dessin, d2: Dessin) -> Optional[Permutation]:
    """A relabeling r with r * sigma1 * r^-1 = sigma2 and r * alpha1 * r^-1 = alpha2, or None."""
    if d1.n_darts != d2.n_darts or passport(d1) != passport(d2):
        return None
    return find_isomorphism([d1.sigma, d1.alpha], [d2.sigma, d2.alpha], d1.n_darts)


def are_isomorphic(d1: Dessin, d2: Dessin) -> bool:
    return isomorphism(d1, d2) is not None


@dataclass(frozen=True)
class RiemannHurwitzReport:
    """
    Riemann-Hurwitz bookkeeping for the covering of a quotient dessin.

    Args:
        - degree (int): Order of the acting group.
        - genus_cover (int): Genus of the covering dessin.
        - genus_quotient (int): Genus of the quotient dessin.
        - contributions (dict[str, int]): Sum of ramification indices minus one, per cell type.
    """

    degree: int
    genus_cover: int
    genus_quotient: int
    contributions: dict[str, int] = field(default_factory=dict)

    @property
    def branch_total(self) -> int:
        return sum(self.contributions.values())

    @property
    def holds(self) -> bool:
        return 2 * self.genus_cover - 2 == self.degree * (2 * self.genus_quotient - 2) + self.branch_total

    @property
    def branch_free(self) -> bool:
        return self.branch_total == 0


def _ramification(cover: Permutation, image: Permutation, class_of: list[int]) -> int:
    image_lengths = {}
    for cycle in image.to_cycles():
        for point in cycle:
            image_lengths[point] = len(cycle)
    total = Fraction(0)
    for cycle in cover.to_cycles():
        total += Fraction(len(cycle), image_lengths[class_of[cycle[0] - 1]]) - 1
    if total.denominator != 1:
        raise TheoryViolationError(f"non-integral ramification {total}")
    return int(total)


def riemann_hurwitz(d: Dessin, group: PermGroup) -> RiemannHurwitzReport:
    """
    Check 2g - 2 = k(2g' - 2) + sum(e - 1) for the quotient of d by a group of order k.

    Explanation:
    A cycle of length l upstairs covers a cycle of length l' of the quotient; its ramification index is l / l'.
        Contributions are summed separately over black vertices, white vertices and faces.

    Args:
        - d (Dessin): The covering dessin.
        - group (PermGroup): A group of automorphisms of d.

    Returns:
        - RiemannHurwitzReport: Degree, genera, contributions and the verdict in ``holds``.
    """
    q, class_of = quotient_with_map(d, group)
    contributions = {
        "black": _ramification(d.sigma, q.sigma, class_of),
        "white": _ramification(d.alpha, q.alpha, class_of),
        "faces": _ramification(d.phi, q.phi, class_of),
    }
    report = RiemannHurwitzReport(group.order, genus(d), genus(q), contributions)
    if not report.holds:
        logger.warning("Riemann-Hurwitz fails for a group of order %d: %s", group.order, report)
    return report


def to_document(d: Dessin) -> dict[str, Any]:
    """JSON document with 1-based cycles, fixed points written out."""
    return {"n": d.n_darts, "sigma": d.sigma.to_cycles(), "alpha": d.alpha.to_cycles()}


def from_document(document: Any) -> Dessin:
    """
    Build a dessin from ``{"n": int, "sigma": [[...]], "alpha": [[...]]}``; omitted fixed points are allowed.

    Explanation:
    The document is validated against the ``DessinDocument`` schema first, so wrong types and missing keys
        are reported as a pydantic ``ValidationError``.

    Raises:
        - ValidationError: If the document does not match the schema.
        - ValueError: If the cycles are malformed.
        - NotTransitiveError: If the pair is disconnected.
    """
    checked = DessinDocument.model_validate(document)
    n = checked.n
    return new_dessin(Permutation.from_cycles(checked.sigma, n), Permutation.from_cycles(checked.alpha, n))
