import pytest

from belyi.dessin import are_isomorphic, automorphism_group, dual, genus, passport
from belyi.enums import SubgroupName
from belyi.exceptions import NotAutomorphismError, TheoryViolationError
from belyi.icosa_catalog import (
    A_GENERATOR,
    EXPECTED_GENERA,
    TRIANGLES,
    DiagramEdge,
    QuotientDiagram,
    SubgroupSpec,
    a5_darts,
    build_diagram,
    build_i0,
    build_i4,
    check_triangle,
    diagram_dot,
    diagram_edges,
    embed_subgroup,
    family_json,
    left_multiplication,
    quotient_family,
    subgroup_representatives,
    subgroup_spec,
)
from belyi.perm_core import Permutation

EXPECTED_PASSPORTS = {
    SubgroupName.E: "[5^12|2^30|5^12]",
    SubgroupName.Z2: "[5^6|2^14,1^2|5^6]",
    SubgroupName.Z3: "[5^4|2^10|5^4]",
    SubgroupName.V4: "[5^3|2^6,1^3|5^3]",
    SubgroupName.Z5: "[5^2,1^2|2^6|5^2,1^2]",
    SubgroupName.S3: "[5^2|2^4,1^2|5^2]",
    SubgroupName.D10: "[5,1|2^2,1^2|5,1]",
    SubgroupName.A4: "[5|2^2,1|5]",
    SubgroupName.A5: "[1|1|1]",
}


@pytest.fixture(scope="module")
def family():
    return quotient_family()


def test_darts_start_with_identity():
    # Act
    darts = a5_darts()

    # Assert
    assert len(darts) == 60
    assert darts[0].is_identity()
    assert len(set(darts)) == 60


@pytest.mark.parametrize(
    "build, compact, expected_genus",
    [
        (build_i0, "[5^12|2^30|3^20]", 0),  # Test ID: HP-icosahedron
        (build_i4, "[5^12|2^30|5^12]", 4),  # Test ID: HP-genus-four
    ],
    ids=["HP-icosahedron", "HP-genus-four"],
)
def test_icosahedral_dessins(build, compact, expected_genus):
    # Act
    d = build()

    # Assert
    assert d.n_darts == 60
    assert passport(d).compact() == compact
    assert genus(d) == expected_genus
    assert automorphism_group(d).order == 60


def test_i4_is_self_dual():
    # Act & Assert
    assert are_isomorphic(dual(build_i4()), build_i4())


def test_left_multiplication_commutes_with_rotations():
    # Arrange
    i4 = build_i4()
    h = left_multiplication(Permutation.from_cycles([[1, 3, 5]], 5))

    # Act & Assert
    assert h * i4.sigma == i4.sigma * h
    assert h * i4.alpha == i4.alpha * h


def test_subgroup_representatives_orders():
    # Act
    specs = subgroup_representatives()

    # Assert
    assert [spec.name for spec in specs] == list(SubgroupName)
    assert all(spec.order == spec.name.order for spec in specs)
    assert all(g.sign() == 1 for spec in specs for g in spec.group)


def test_embed_subgroup_acts_freely():
    # Act
    group = embed_subgroup(subgroup_spec(SubgroupName.D10))

    # Assert
    assert group.order == 10
    assert group.degree == 60
    assert group.is_fixed_point_free()


def test_embed_subgroup_order_mismatch():
    # Arrange
    wrong = SubgroupSpec(SubgroupName.V4, (Permutation.from_cycles([[2, 4], [3, 5]], 5),))

    # Act & Assert
    with pytest.raises(TheoryViolationError):
        embed_subgroup(wrong)


def test_quotient_family_genera_and_passports(family):
    # Act
    result = {node.spec.name: node for node in family}

    # Assert
    assert [node.spec.name for node in family] == list(SubgroupName)
    for name, node in result.items():
        assert node.genus == EXPECTED_GENERA[name], node.label
        assert node.passport.compact() == EXPECTED_PASSPORTS[name], node.label
        assert node.dessin.n_darts == 60 // name.order
        assert node.riemann_hurwitz.holds, node.label


def test_quotient_family_on_thread_pool(family):
    # Act
    pooled = quotient_family(max_workers=4)

    # Assert
    assert [node.passport for node in pooled] == [node.passport for node in family]


def test_family_json(family):
    # Act
    documents = family_json(family)

    # Assert
    d10 = documents[6]
    assert d10 == {
        "group": "D10",
        "order": 10,
        "darts": 6,
        "genus": 0,
        "passport": "{5,1|2,2,1,1|5,1}",
        "black": [5, 1],
        "white": [2, 2, 1, 1],
        "faces": [5, 1],
        "riemann_hurwitz": True,
    }


@pytest.mark.parametrize("normal, top", TRIANGLES, ids=[f"HP-{n.value}-{m.value}" for n, m in TRIANGLES])
def test_triangles_commute(normal, top):
    # Act
    result = check_triangle(subgroup_spec(normal), subgroup_spec(top))

    # Assert
    assert result
    assert result.index == top.order // normal.order


def test_v4_a4_triangle_is_unramified():
    # Act
    result = check_triangle(subgroup_spec(SubgroupName.V4), subgroup_spec(SubgroupName.A4))

    # Assert
    assert result.index == 3
    assert result.branch_free


def test_triangle_requires_containment():
    # Act & Assert
    with pytest.raises(ValueError):
        check_triangle(subgroup_spec(SubgroupName.Z3), subgroup_spec(SubgroupName.V4))


def test_triangle_requires_normality():
    # Act & Assert
    with pytest.raises(NotAutomorphismError):
        check_triangle(subgroup_spec(SubgroupName.Z5), subgroup_spec(SubgroupName.A5))


def test_diagram_edges_are_the_hasse_diagram():
    # Act
    edges = diagram_edges()

    # Assert
    assert len(edges) == 13
    assert DiagramEdge(SubgroupName.V4, SubgroupName.A4, 3) in edges
    assert DiagramEdge(SubgroupName.Z2, SubgroupName.D10, 5) in edges
    assert DiagramEdge(SubgroupName.E, SubgroupName.Z5, 5) in edges
    assert all(edge.target != SubgroupName.E for edge in edges)
    assert not any(edge.source == SubgroupName.E and edge.target == SubgroupName.A5 for edge in edges)
    assert not any(edge.source == SubgroupName.Z3 and edge.target == SubgroupName.D10 for edge in edges)


def test_diagram_dot(family):
    # Act
    dot = diagram_dot(build_diagram(family))

    # Assert
    assert dot.startswith("digraph quotients {\n")
    assert dot.endswith("}\n")
    assert '  "I4/D10" [label="I4/D10 (genus 0, [5,1|2^2,1^2|5,1])"];' in dot
    assert '  "I4/V4" -> "I4/A4" [label="3"];' in dot
    assert dot.count("->") == 13


def test_diagram_dot_empty():
    # Act & Assert
    assert diagram_dot(QuotientDiagram()) == "digraph quotients {\n}\n"


def test_a_generator_is_five_cycle():
    assert A_GENERATOR.order() == 5
