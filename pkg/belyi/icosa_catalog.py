# Description: The icosahedral dessins I0 and I4, the subgroups of A5 and the family of quotients of I4.
#
# Darts are the 60 elements of A5, sorted by their image tuples, so the identity is dart 1.
# Black and white rotations are right multiplications; automorphisms are left multiplications.
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Optional, Sequence

from belyi.dessin import (
    Dessin,
    Passport,
    RiemannHurwitzReport,
    are_isomorphic,
    genus,
    new_dessin,
    passport,
    quotient,
    quotient_with_map,
    riemann_hurwitz,
)
from belyi.enums import SubgroupName
from belyi.exceptions import NotAutomorphismError, TheoryViolationError
from belyi.perm_core import PermGroup, Permutation, closure, conjugate_into

logger = logging.getLogger(__name__)

A_GENERATOR = Permutation.from_cycles([[1, 2, 3, 4, 5]], 5)
B_GENERATOR = Permutation.from_cycles([[2, 3], [4, 5]], 5)

EXPECTED_GENERA: dict[SubgroupName, int] = {
    SubgroupName.E: 4,
    SubgroupName.Z2: 2,
    SubgroupName.Z3: 2,
    SubgroupName.V4: 1,
    SubgroupName.Z5: 0,
    SubgroupName.S3: 1,
    SubgroupName.D10: 0,
    SubgroupName.A4: 1,
    SubgroupName.A5: 0,
}

TRIANGLES: tuple[tuple[SubgroupName, SubgroupName], ...] = (
    (SubgroupName.Z2, SubgroupName.V4),
    (SubgroupName.Z3, SubgroupName.S3),
    (SubgroupName.Z5, SubgroupName.D10),
    (SubgroupName.V4, SubgroupName.A4),
)

_GENERATOR_CYCLES: dict[SubgroupName, list[list[list[int]]]] = {
    SubgroupName.E: [],
    SubgroupName.Z2: [[[2, 4], [3, 5]]],
    SubgroupName.Z3: [[[1, 2, 3]]],
    SubgroupName.V4: [[[2, 4], [3, 5]], [[2, 3], [4, 5]]],
    SubgroupName.Z5: [[[1, 2, 3, 4, 5]]],
    SubgroupName.S3: [[[1, 2, 3]], [[1, 2], [4, 5]]],
    SubgroupName.D10: [[[1, 2, 3, 4, 5]], [[2, 5], [3, 4]]],
    SubgroupName.A4: [[[2, 3, 4]], [[2, 4], [3, 5]]],
    SubgroupName.A5: [[[1, 2, 3, 4, 5]], [[2, 3], [4, 5]]],
}


@dataclass(frozen=True)
class SubgroupSpec:
    """
    A named subgroup of A5 given by generators acting on {1, ..., 5}.

    Args:
        - name (SubgroupName): Conjugacy class label.
        - generators (tuple[Permutation, ...]): Generators in S5; empty for the trivial group.
    """

    name: SubgroupName
    generators: tuple[Permutation, ...]

    @property
    def group(self) -> PermGroup:
        if not self.generators:
            return PermGroup(degree=5, elements=(Permutation.identity(5),))
        return closure(self.generators)

    @property
    def order(self) -> int:
        return self.group.order


@lru_cache(maxsize=None)
def a5_group() -> PermGroup:
    return closure([A_GENERATOR, B_GENERATOR])


@lru_cache(maxsize=None)
def a5_darts() -> tuple[Permutation, ...]:
    """Elements of A5 in dart order."""
    return tuple(sorted(a5_group().elements, key=lambda p: p.images))


@lru_cache(maxsize=None)
def _dart_index() -> dict[Permutation, int]:
    return {g: i for i, g in enumerate(a5_darts())}


def right_multiplication(x: Permutation) -> Permutation:
    """The dart permutation g -> g * x."""
    index = _dart_index()
    return Permutation(tuple(index[g * x] for g in a5_darts()))


def left_multiplication(h: Permutation) -> Permutation:
    """The dart permutation g -> h * g; it commutes with every right multiplication."""
    index = _dart_index()
    return Permutation(tuple(index[h * g] for g in a5_darts()))


@lru_cache(maxsize=None)
def build_i0() -> Dessin:
    """
    The icosahedron as a regular dessin on A5.

    Explanation:
    Black vertices are the cosets of <a>, white vertices the cosets of <b>, and faces the cosets of <b * a>,
        which has order 3, so the passport is [5^12|2^30|3^20] on the sphere.

    Returns:
        - Dessin: The regular icosahedral dessin on 60 darts.
    """
    return new_dessin(right_multiplication(A_GENERATOR), right_multiplication(B_GENERATOR))


@lru_cache(maxsize=None)
def build_i4() -> Dessin:
    """
    The genus 4 icosahedron (sigma^2, alpha) with passport [5^12|2^30|5^12].

    >>> build_i4().n_darts
    60
    """
    return new_dessin(right_multiplication(A_GENERATOR * A_GENERATOR), right_multiplication(B_GENERATOR))


def subgroup_representatives() -> list[SubgroupSpec]:
    """One representative per conjugacy class of subgroups of A5, in increasing order."""
    return [
        SubgroupSpec(name, tuple(Permutation.from_cycles(cycles, 5) for cycles in _GENERATOR_CYCLES[name]))
        for name in SubgroupName
    ]


def subgroup_spec(name: SubgroupName) -> SubgroupSpec:
    return next(spec for spec in subgroup_representatives() if spec.name == name)


def embed_subgroup(spec: SubgroupSpec) -> PermGroup:
    """
    The subgroup acting on the darts of I0 and I4 by left multiplication.

    Raises:
        - TheoryViolationError: If the embedded group has a different order.
    """
    darts = [left_multiplication(h) for h in spec.generators]
    if darts:
        embedded = closure(darts)
    else:
        embedded = PermGroup(degree=60, elements=(Permutation.identity(60),))
    if embedded.order != spec.name.order:
        raise TheoryViolationError(f"{spec.name.value} embeds with order {embedded.order}")
    return embedded


@dataclass(frozen=True)
class QuotientNode:
    """
    The quotient of I4 by one subgroup, with its passport, genus and Riemann-Hurwitz bookkeeping.
    """

    spec: SubgroupSpec
    dessin: Dessin
    passport: Passport
    genus: int
    riemann_hurwitz: RiemannHurwitzReport

    @property
    def label(self) -> str:
        return f"I4/{self.spec.name.value}"

    def as_dict(self) -> dict[str, Any]:
        return {
            "group": self.spec.name.value,
            "order": self.spec.name.order,
            "darts": self.dessin.n_darts,
            "genus": self.genus,
            "passport": str(self.passport),
            **self.passport.as_lists(),
            "riemann_hurwitz": self.riemann_hurwitz.holds,
        }


def quotient_node(spec: SubgroupSpec, i4: Optional[Dessin] = None) -> QuotientNode:
    i4 = i4 or build_i4()
    group = embed_subgroup(spec)
    q = quotient(i4, group)
    node = QuotientNode(spec, q, passport(q), genus(q), riemann_hurwitz(i4, group))
    logger.debug("%s: %s genus %d", node.label, node.passport.compact(), node.genus)
    return node


def quotient_family(max_workers: Optional[int] = None) -> list[QuotientNode]:
    """
    The nine quotients of I4, one per subgroup class of A5, in increasing group order.

    Explanation:
    With ``max_workers`` the nodes are computed on a thread pool; ``map`` keeps the result order fixed.

    Args:
        - max_workers (int | None): Thread count, or None to compute sequentially.

    Returns:
        - list[QuotientNode]: Quotient nodes from I4/e to I4/A5.
    """
    specs = subgroup_representatives()
    i4 = build_i4()
    if max_workers is None:
        return [quotient_node(spec, i4) for spec in specs]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda spec: quotient_node(spec, i4), specs))


def family_json(nodes: Optional[Sequence[QuotientNode]] = None) -> list[dict[str, Any]]:
    return [node.as_dict() for node in (quotient_family() if nodes is None else nodes)]


@dataclass(frozen=True)
class TriangleCheck:
    """
    Outcome of comparing (I4/N)/(M/N) with I4/M.

    Args:
        - normal (SubgroupName): The inner subgroup N.
        - top (SubgroupName): The outer subgroup M.
        - isomorphic (bool): Whether the two-step quotient is isomorphic to the direct one.
        - index (int): |M| / |N|, the degree of the second step.
        - branch_free (bool): Whether the second step is unramified.
    """

    normal: SubgroupName
    top: SubgroupName
    isomorphic: bool
    index: int
    branch_free: bool

    def __bool__(self) -> bool:
        return self.isomorphic


def check_triangle(n_spec: SubgroupSpec, nm_spec: SubgroupSpec, i4: Optional[Dessin] = None) -> TriangleCheck:
    """
    Check that quotienting I4 by N and then by the induced action of M agrees with quotienting by M.

    Explanation:
    An element h of M acts on the N-orbits by [g] -> [h g]. This is well defined when N is normal in M, and
        the result must be isomorphic to I4/M.

    Args:
        - n_spec (SubgroupSpec): Normal subgroup N.
        - nm_spec (SubgroupSpec): Subgroup M containing N.
        - i4 (Dessin | None): The covering dessin. Defaults to I4.

    Returns:
        - TriangleCheck: Verdict, index and branching of the second step.

    Raises:
        - ValueError: If N is not contained in M.
        - NotAutomorphismError: If M does not permute the N-orbits.
    """
    i4 = i4 or build_i4()
    if not n_spec.group.is_subgroup_of(nm_spec.group):
        raise ValueError(f"{n_spec.name.value} is not contained in {nm_spec.name.value}")
    first, class_of = quotient_with_map(i4, embed_subgroup(n_spec))
    induced = []
    for h in embed_subgroup(nm_spec).generators:
        images = [0] * first.n_darts
        for dart in range(1, i4.n_darts + 1):
            source, target = class_of[dart - 1], class_of[h(dart) - 1]
            if images[source - 1] and images[source - 1] != target:
                raise NotAutomorphismError(f"{nm_spec.name.value} does not normalize {n_spec.name.value}")
            images[source - 1] = target
        induced.append(Permutation.from_images(images))
    induced = [p for p in induced if not p.is_identity()]
    if induced:
        induced_group = closure(induced)
    else:
        induced_group = PermGroup(degree=first.n_darts, elements=(Permutation.identity(first.n_darts),))
    second = quotient(first, induced_group)
    direct = quotient(i4, embed_subgroup(nm_spec))
    report = riemann_hurwitz(first, induced_group)
    result = TriangleCheck(
        normal=n_spec.name,
        top=nm_spec.name,
        isomorphic=are_isomorphic(second, direct),
        index=nm_spec.name.order // n_spec.name.order,
        branch_free=report.branch_free,
    )
    if not result:
        logger.warning("triangle %s < %s does not commute", n_spec.name.value, nm_spec.name.value)
    return result


@dataclass(frozen=True)
class DiagramEdge:
    source: SubgroupName
    target: SubgroupName
    index: int


@dataclass(frozen=True)
class QuotientDiagram:
    """Quotient nodes and covering arrows I4/H1 -> I4/H2 for H1 contained in a conjugate of H2."""

    nodes: tuple[QuotientNode, ...] = ()
    edges: tuple[DiagramEdge, ...] = field(default_factory=tuple)


def _contained_up_to_conjugacy(h1: SubgroupSpec, h2: SubgroupSpec) -> bool:
    if h1.name.order >= h2.name.order:
        return False
    return conjugate_into(h1.group, h2.group, a5_group()) is not None


def diagram_edges(specs: Optional[Sequence[SubgroupSpec]] = None) -> list[DiagramEdge]:
    """
    Covering arrows of the quotient diagram, transitively reduced.

    Explanation:
    An arrow H1 -> H2 exists when H1 is conjugate into H2; arrows implied by a chain through an intermediate
        subgroup are dropped. The label is the index |H2| / |H1|.
    """
    specs = list(specs if specs is not None else subgroup_representatives())
    contains = {(h1.name, h2.name) for h1 in specs for h2 in specs if _contained_up_to_conjugacy(h1, h2)}
    edges = []
    for h1 in specs:
        for h2 in specs:
            if (h1.name, h2.name) not in contains:
                continue
            if any((h1.name, k.name) in contains and (k.name, h2.name) in contains for k in specs):
                continue
            edges.append(DiagramEdge(h1.name, h2.name, h2.name.order // h1.name.order))
    return edges


def build_diagram(nodes: Optional[Sequence[QuotientNode]] = None) -> QuotientDiagram:
    nodes = tuple(quotient_family() if nodes is None else nodes)
    return QuotientDiagram(nodes=nodes, edges=tuple(diagram_edges([node.spec for node in nodes])))


def diagram_dot(q: QuotientDiagram) -> str:
    """
    Render the diagram as a Graphviz digraph.

    >>> diagram_dot(QuotientDiagram())
    'digraph quotients {\\n}\\n'
    """
    present = {node.spec.name for node in q.nodes}
    lines = ["digraph quotients {"]
    for node in q.nodes:
        lines.append(f'  "{node.label}" [label="{node.label} (genus {node.genus}, {node.passport.compact()})"];')
    for edge in q.edges:
        if edge.source in present and edge.target in present:
            lines.append(f'  "I4/{edge.source.value}" -> "I4/{edge.target.value}" [label="{edge.index}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
