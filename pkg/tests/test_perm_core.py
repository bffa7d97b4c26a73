import numpy as np
import pytest

from belyi.exceptions import GroupTooLargeError, NotTransitiveError
from belyi.perm_core import (
    Permutation,
    alternating_group,
    centralizer_in_sym,
    closure,
    conjugate_into,
    cycle_type,
    find_isomorphism,
    is_transitive,
    orbits,
    symmetric_group,
)


def cyc(cycles, n):
    return Permutation.from_cycles(cycles, n)


@pytest.mark.parametrize(
    "cycles, n, expected",
    [
        ([[2, 3, 4, 5, 6]], 6, [[1], [2, 3, 4, 5, 6]]),  # Test ID: HP-fixed-point-explicit
        ([[3, 1, 2]], 3, [[1, 2, 3]]),  # Test ID: HP-rotated-cycle
        ([], 2, [[1], [2]]),  # Test ID: EC-identity
    ],
    ids=["HP-fixed-point-explicit", "HP-rotated-cycle", "EC-identity"],
)
def test_from_cycles_to_cycles(cycles, n, expected):
    # Act
    result = cyc(cycles, n).to_cycles()

    # Assert
    assert result == expected


@pytest.mark.parametrize(
    "cycles, n",
    [
        ([[1, 2], [2, 3]], 3),  # Test ID: ERR-repeated-dart
        ([[1, 4]], 3),  # Test ID: ERR-dart-out-of-range
    ],
    ids=["ERR-repeated-dart", "ERR-dart-out-of-range"],
)
def test_from_cycles_errors(cycles, n):
    # Act & Assert
    with pytest.raises(ValueError):
        cyc(cycles, n)


def test_invalid_images_rejected():
    # Act & Assert
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_product_applies_right_factor_first():
    # Arrange
    p, q = cyc([[1, 2]], 3), cyc([[2, 3]], 3)

    # Act
    product = p * q

    # Assert
    assert product == cyc([[1, 2, 3]], 3)
    assert all(product(x) == p(q(x)) for x in range(1, 4))


def test_product_degree_mismatch():
    # Act & Assert
    with pytest.raises(ValueError):
        _ = Permutation.identity(2) * Permutation.identity(3)


@pytest.mark.parametrize(
    "cycles, n, order, sign, ctype",
    [
        ([[1, 2, 3, 4, 5]], 5, 5, 1, (5,)),  # Test ID: HP-five-cycle
        ([[2, 3], [4, 5]], 5, 2, 1, (2, 2, 1)),  # Test ID: HP-double-transposition
        ([[1, 2], [3, 4, 5]], 5, 6, -1, (3, 2)),  # Test ID: HP-mixed
        ([], 4, 1, 1, (1, 1, 1, 1)),  # Test ID: EC-identity
    ],
    ids=["HP-five-cycle", "HP-double-transposition", "HP-mixed", "EC-identity"],
)
def test_order_sign_cycle_type(cycles, n, order, sign, ctype):
    # Arrange
    p = cyc(cycles, n)

    # Act & Assert
    assert p.order() == order
    assert p.sign() == sign
    assert cycle_type(p) == ctype


def test_inverse_and_power():
    # Arrange
    a = cyc([[1, 2, 3, 4, 5]], 5)

    # Act & Assert
    assert (a * a.inverse()).is_identity()
    assert (a ** 5).is_identity()
    assert a ** -1 == a.inverse()
    assert a ** 2 == a * a


def test_str_writes_fixed_points():
    assert str(cyc([[2, 3, 4, 5, 6]], 6)) == "(1)(2 3 4 5 6)"


@pytest.mark.parametrize(
    "gens, n, expected",
    [
        ([cyc([[1, 2]], 2)], 2, True),  # Test ID: HP-transposition
        ([cyc([[1, 2]], 4), cyc([[3, 4]], 4)], 4, False),  # Test ID: HP-two-orbits
        ([], 1, True),  # Test ID: EC-single-dart
        ([], 2, False),  # Test ID: EC-no-generators
        ([Permutation.identity(2)], 2, False),  # Test ID: EC-identity-only
    ],
    ids=["HP-transposition", "HP-two-orbits", "EC-single-dart", "EC-no-generators", "EC-identity-only"],
)
def test_is_transitive(gens, n, expected):
    assert is_transitive(gens, n) is expected


def test_orbits_sorted_by_smallest_dart():
    # Act
    result = orbits([cyc([[4, 2]], 4), cyc([[3, 1]], 4)], 4)

    # Assert
    assert result == [[1, 3], [2, 4]]


@pytest.mark.parametrize(
    "gens, order",
    [
        ([cyc([[1, 2, 3, 4, 5]], 5)], 5),  # Test ID: HP-cyclic
        ([cyc([[1, 2, 3, 4, 5]], 5), cyc([[2, 3], [4, 5]], 5)], 60),  # Test ID: HP-A5
        ([cyc([[2, 4], [3, 5]], 5), cyc([[2, 3], [4, 5]], 5)], 4),  # Test ID: HP-V4
        ([Permutation.identity(3)], 1),  # Test ID: EC-trivial
    ],
    ids=["HP-cyclic", "HP-A5", "HP-V4", "EC-trivial"],
)
def test_closure_order(gens, order):
    # Act
    group = closure(gens)

    # Assert
    assert group.order == order
    assert group.elements[0].is_identity()
    assert all(g * h in group for g in group for h in group)


def test_closure_errors():
    # Act & Assert
    with pytest.raises(ValueError):
        closure([])
    with pytest.raises(GroupTooLargeError):
        closure([cyc([[1, 2]], 5), cyc([[1, 2, 3, 4, 5]], 5)], cap=10)


def test_symmetric_and_alternating_groups():
    # Act & Assert
    assert symmetric_group(5).order == 120
    assert alternating_group(5).order == 60
    assert symmetric_group(1).order == 1
    assert all(p.sign() == 1 for p in alternating_group(4))


@pytest.mark.parametrize("n", [1, 5, 12], ids=["EC-n1", "HP-n5", "HP-n12"])
def test_centralizer_of_full_cycle_is_cyclic(n):
    # Arrange
    rotation = cyc([list(range(1, n + 1))], n)

    # Act
    group = centralizer_in_sym([rotation], n)

    # Assert
    assert group.order == n
    assert all(c * rotation == rotation * c for c in group)
    assert group.is_fixed_point_free()


def test_centralizer_rejects_intransitive_input():
    # Act & Assert
    with pytest.raises(NotTransitiveError) as exc_info:
        centralizer_in_sym([cyc([[1, 2]], 4)], 4)
    assert exc_info.value.orbits == [[1, 2], [3], [4]]


def test_find_isomorphism_conjugates_generators():
    # Arrange
    source = [cyc([[1, 2, 3]], 4), cyc([[3, 4]], 4)]
    r = cyc([[1, 4, 2]], 4)
    target = [r * s * r.inverse() for s in source]

    # Act
    found = find_isomorphism(source, target, 4)

    # Assert
    assert found is not None
    assert all(found * s * found.inverse() == t for s, t in zip(source, target))


def test_find_isomorphism_none_for_different_shapes():
    # Act
    result = find_isomorphism([cyc([[1, 2, 3]], 3)], [cyc([[1, 2]], 3)], 3)

    # Assert
    assert result is None


def test_conjugate_into():
    # Arrange
    a5 = alternating_group(5)
    z2 = closure([cyc([[1, 2], [3, 4]], 5)])
    v4 = closure([cyc([[2, 4], [3, 5]], 5), cyc([[2, 3], [4, 5]], 5)])
    z3 = closure([cyc([[1, 2, 3]], 5)])

    # Act
    g = conjugate_into(z2, v4, a5)

    # Assert
    assert g is not None
    assert z2.conjugate(g) <= set(v4)
    assert conjugate_into(z3, v4, a5) is None


def random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    return Permutation.from_images([int(x) + 1 for x in rng.permutation(n)])


@pytest.mark.parametrize("seed, n", [(1, 5), (2, 12), (3, 60)], ids=["HP-degree5", "HP-degree12", "HP-degree60"])
def test_cycle_type_is_a_conjugacy_invariant(seed, n):
    # Arrange
    rng = np.random.default_rng(seed)

    for _ in range(20):
        p, q = random_permutation(rng, n), random_permutation(rng, n)

        # Act
        conjugated = q * p * q.inverse()

        # Assert
        assert cycle_type(conjugated) == cycle_type(p), f"conjugating {p} by {q} changed its cycle type"
        assert conjugated.order() == p.order()
        assert conjugated.sign() == p.sign()
