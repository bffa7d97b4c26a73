from enum import Enum, IntEnum


class CheckStatus(str, Enum):
    """
    Enumeration representing the outcome of a single verification check.

    Explanation:
    A check passes when every identity it covers holds, fails when an identity is violated and errors when
        the computation itself raised.

    Args:
        - No arguments required for class methods.

    Returns:
        - No return value for class methods.
    """

    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


class ExitCode(IntEnum):
    """Process exit codes of the command-line interface."""

    OK = 0
    FAILURE = 1
    USAGE = 2


class SubgroupName(str, Enum):
    """
    Enumeration of the conjugacy classes of subgroups of A5.

    Explanation:
    Each member names one representative used by the icosahedral catalog. The value is the label printed
        in reports and diagrams; the order matches the expected subgroup order list below.

    Args:
        - No arguments required for class methods.

    Returns:
        - No return value for class methods.
    """

    E = "e"
    Z2 = "Z2"
    Z3 = "Z3"
    V4 = "V4"
    Z5 = "Z5"
    S3 = "S3"
    D10 = "D10"
    A4 = "A4"
    A5 = "A5"

    @property
    def order(self) -> int:
        return _SUBGROUP_ORDERS[self]


_SUBGROUP_ORDERS = {
    SubgroupName.E: 1,
    SubgroupName.Z2: 2,
    SubgroupName.Z3: 3,
    SubgroupName.V4: 4,
    SubgroupName.Z5: 5,
    SubgroupName.S3: 6,
    SubgroupName.D10: 10,
    SubgroupName.A4: 12,
    SubgroupName.A5: 60,
}


class Suite(str, Enum):
    """Groups of acceptance checks that can be run together."""

    CATALOG = "catalog"
    BELYI = "belyi"
    CURVES = "curves"
    BRING = "bring"
    ALL = "all"
