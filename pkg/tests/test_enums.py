import pytest

from belyi.enums import CheckStatus, ExitCode, SubgroupName, Suite

# Define a list of tuples containing enum members and their expected values
subgroup_orders = [
    (SubgroupName.E, 1, "test_trivial"),
    (SubgroupName.Z2, 2, "test_z2"),
    (SubgroupName.Z3, 3, "test_z3"),
    (SubgroupName.V4, 4, "test_klein"),
    (SubgroupName.Z5, 5, "test_z5"),
    (SubgroupName.S3, 6, "test_s3"),
    (SubgroupName.D10, 10, "test_d10"),
    (SubgroupName.A4, 12, "test_a4"),
    (SubgroupName.A5, 60, "test_a5"),
]


@pytest.mark.parametrize("subgroup, expected_order, test_id", subgroup_orders)
def test_subgroup_orders(subgroup, expected_order, test_id):
    # Assert
    assert subgroup.order == expected_order, f"{test_id}: The order of {subgroup} should be {expected_order}"
    assert 60 % subgroup.order == 0, f"{test_id}: {subgroup} should have an order dividing 60"


@pytest.mark.parametrize(
    "status, expected_value",
    [(CheckStatus.PASS, "pass"), (CheckStatus.FAIL, "fail"), (CheckStatus.ERROR, "error")],
    ids=["pass", "fail", "error"],
)
def test_check_status_values(status, expected_value):
    assert status == expected_value, f"The value of {status} should be {expected_value}"


def test_exit_codes():
    assert [int(code) for code in ExitCode] == [0, 1, 2]


def test_suite_lookup_by_value():
    assert Suite("curves") is Suite.CURVES
    with pytest.raises(ValueError):
        Suite("everything")
