# Description: Exact permutation arithmetic and small-group computations.
#
# Darts are labelled 1..n in every external format. Products follow (p * q)(x) = p(q(x)):
# the right factor is applied first.
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence

from belyi.exceptions import GroupTooLargeError, NotTransitiveError

logger = logging.getLogger(__name__)

CLOSURE_CAP: int = 10_000


@dataclass(frozen=True)
class Permutation:
    """
    A bijection of {1, ..., n}.

    Explanation:
    Images are stored 0-based in a tuple; every public method speaks 1-based dart labels.
    Instances are immutable and hashable, so they can be collected in sets and used as dictionary keys.

    Args:
        - images (tuple[int, ...]): 0-based images, images[i] is the image of dart i + 1.

    Raises:
        - ValueError: If images is not a bijection of range(n).
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from 1-based images: images[k] is the image of dart k + 1."""
        return cls(tuple(x - 1 for x in images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """
        Build a permutation from 1-based cycles; omitted points are fixed.

        >>> Permutation.from_cycles([[2, 3, 4, 5, 6]], 6).to_cycles()
        [[1], [2, 3, 4, 5, 6]]

        :param cycles: 1-based cycles
        :param n: degree
        :return: the permutation
        """
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            for k, point in enumerate(cycle):
                if not 1 <= point <= n:
                    raise ValueError(f"dart {point} outside 1..{n}")
                if point in seen:
                    raise ValueError(f"dart {point} appears twice")
                seen.add(point)
                images[point - 1] = cycle[(k + 1) % len(cycle)] - 1
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inverse = [0] * self.degree
        for i, j in enumerate(self.images):
            inverse[j] = i
        return Permutation(tuple(inverse))

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def to_cycles(self) -> list[list[int]]:
        """1-based cycles, each starting at its smallest dart, fixed points included."""
        seen = [False] * self.degree
        cycles = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point + 1)
                point = self.images[point]
            cycles.append(cycle)
        return cycles

    def sign(self) -> int:
        return -1 if (self.degree - len(self.to_cycles())) % 2 else 1

    def order(self) -> int:
        return lcm(*cycle_type(self))

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.to_cycles())


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """
    Multiset of cycle lengths, sorted in decreasing order.

    >>> cycle_type(Permutation.from_cycles([[2, 3, 4, 5, 6]], 6))
    (5, 1)
    """
    return tuple(sorted((len(c) for c in p.to_cycles()), reverse=True))


def orbits(gens: Sequence[Permutation], n: int) -> list[list[int]]:
    """1-based orbits of the group generated by gens, ordered by their smallest dart."""
    seen = [False] * n
    result = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        orbit = [start]
        seen[start - 1] = True
        queue = deque([start])
        while queue:
            point = queue.popleft()
            for g in gens:
                image = g(point)
                if not seen[image - 1]:
                    seen[image - 1] = True
                    orbit.append(image)
                    queue.append(image)
        result.append(sorted(orbit))
    return result


def is_transitive(gens: Sequence[Permutation], n: int) -> bool:
    """
    Whether the group generated by gens acts transitively on {1, ..., n}.

    An empty generator list connects nothing, so it is transitive only when n <= 1.
    """
    for g in gens:
        if g.degree != n:
            raise ValueError(f"generator of degree {g.degree} on {n} darts")
    if n <= 1:
        return True
    return len(orbits(gens, n)) == 1


@dataclass(frozen=True)
class PermGroup:
    """
    A permutation group stored as an explicit element list.

    Explanation:
    Elements are kept in the breadth-first order produced by closure, with the identity first.
    Group orders in this toolkit never exceed 120, so explicit storage is adequate.

    Args:
        - degree (int): Number of points acted on.
        - elements (tuple[Permutation, ...]): All group elements.
        - generators (tuple[Permutation, ...]): Generators the group was built from.
    """

    degree: int
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._element_set

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self._element_set <= other._element_set

    def conjugate(self, g: Permutation) -> frozenset[Permutation]:
        """The set g * H * g^-1."""
        g_inv = g.inverse()
        return frozenset(g * h * g_inv for h in self.elements)

    def is_fixed_point_free(self) -> bool:
        """Whether every non-identity element moves every point."""
        return all(
            all(i != j for i, j in enumerate(h.images)) for h in self.elements if not h.is_identity()
        )


def closure(gens: Sequence[Permutation], cap: int = CLOSURE_CAP) -> PermGroup:
    """
    Materialize the group generated by gens by breadth-first products.

    Explanation:
    Starting from the identity, each new element is multiplied on the right by every generator until no
        new element appears. Finite permutation groups are closed under inverses once closed under products.

    Args:
        - gens (Sequence[Permutation]): At least one generator, all of the same degree.
        - cap (int): Safety cap on the group order. Defaults to 10,000.

    Returns:
        - PermGroup: The generated group.

    Raises:
        - ValueError: If gens is empty.
        - GroupTooLargeError: If the order exceeds cap.

    Examples:
        >>> closure([Permutation.from_cycles([[1, 2, 3, 4, 5]], 5)]).order
        5
    """
    if not gens:
        raise ValueError("closure needs at least one generator")
    identity = Permutation.identity(gens[0].degree)
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            product = current * g
            if product not in seen:
                seen.add(product)
                elements.append(product)
                if len(elements) > cap:
                    raise GroupTooLargeError(f"group order exceeds the safety cap {cap}")
                queue.append(product)
    logger.debug("closure of %d generators has order %d", len(gens), len(elements))
    return PermGroup(degree=identity.degree, elements=tuple(elements), generators=tuple(gens))


def _propagate(
    source: Sequence[Permutation], target: Sequence[Permutation], n: int, image_of_first: int
) -> Optional[Permutation]:
    """
    The unique relabeling r with r(1) = image_of_first and r * s = t * r for paired generators, if any.

    Both generator lists must generate transitive groups; transitivity makes r determined by r(1).
    """
    mapping = [0] * (n + 1)
    used = [False] * (n + 1)
    mapping[1] = image_of_first
    used[image_of_first] = True
    queue = deque([1])
    while queue:
        point = queue.popleft()
        for s, t in zip(source, target):
            x, y = s(point), t(mapping[point])
            if mapping[x]:
                if mapping[x] != y:
                    return None
            else:
                if used[y]:
                    return None
                mapping[x] = y
                used[y] = True
                queue.append(x)
    if not all(mapping[1:]):
        return None
    return Permutation.from_images(mapping[1:])


def centralizer_in_sym(gens: Sequence[Permutation], n: int) -> PermGroup:
    """
    All permutations of {1, ..., n} commuting with every generator.

    Explanation:
    For a transitive group a commuting permutation is determined by the image of dart 1, so the n candidate
        images are tested by orbit propagation. The result acts freely and its order divides n.

    Args:
        - gens (Sequence[Permutation]): Generators of a transitive group.
        - n (int): Number of darts.

    Returns:
        - PermGroup: The centralizer.

    Raises:
        - NotTransitiveError: If gens do not generate a transitive group.
    """
    if not is_transitive(gens, n):
        raise NotTransitiveError(orbits(gens, n))
    elements = []
    for candidate in range(1, n + 1):
        c = _propagate(gens, gens, n, candidate)
        if c is not None:
            elements.append(c)
    logger.debug("centralizer on %d darts has order %d", n, len(elements))
    return PermGroup(degree=n, elements=tuple(elements), generators=tuple(elements))


def find_isomorphism(
    source: Sequence[Permutation], target: Sequence[Permutation], n: int
) -> Optional[Permutation]:
    """A relabeling r with r * s * r^-1 = t for each generator pair, or None; anchored on the image of dart 1."""
    for candidate in range(1, n + 1):
        r = _propagate(source, target, n, candidate)
        if r is not None:
            return r
    return None


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(degree=1, elements=(Permutation.identity(1),))
    return closure([Permutation.from_cycles([[1, 2]], n), Permutation.from_cycles([list(range(1, n + 1))], n)])


def alternating_group(n: int) -> PermGroup:
    even = tuple(p for p in symmetric_group(n) if p.sign() == 1)
    return PermGroup(degree=n, elements=even)


def conjugate_into(h1: PermGroup, h2: PermGroup, ambient: PermGroup) -> Optional[Permutation]:
    """A conjugator g in ambient with g * h1 * g^-1 contained in h2, or None."""
    if h2.order % h1.order:
        return None
    target = h2._element_set
    for g in ambient:
        if h1.conjugate(g) <= target:
            return g
    return None
