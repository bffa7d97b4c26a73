from datetime import datetime, timezone

import pytest

from belyi import models
from belyi.enums import CheckStatus, Suite
from belyi.schemas import CheckRecord, DessinDocument, PassportSchema, QuotientRequest, VerificationRun
from tests.factories import CheckRecordFactory, DessinDocumentFactory


# Happy path tests with various realistic test values
@pytest.mark.parametrize(
    "test_id, n, sigma, alpha",
    [
        ("HP_01", 6, [[2, 3, 4, 5, 6]], [[1, 2], [4, 5]]),
        ("HP_02", 4, [[1, 2, 3, 4]], []),
        ("HP_03", 1, [], []),
    ]
)
def test_dessin_document_happy_path(test_id, n, sigma, alpha):
    # Act
    document = DessinDocument(n=n, sigma=sigma, alpha=alpha)

    # Assert
    assert document.n == n
    assert document.sigma == sigma
    assert document.alpha == alpha


# Error cases
@pytest.mark.parametrize(
    "test_id, n, sigma, alpha, expected_exception",
    [
        ("ERR_01", 0, [], [], ValueError),  # No darts
        ("ERR_02", -3, [[1, 2]], [], ValueError),  # Negative dart count
        ("ERR_03", "six", [[1, 2]], [], ValueError),  # Non-integer dart count
        ("ERR_04", 4, [["a", 2]], [], ValueError),  # Non-integer dart
        ("ERR_05", 4, [1, 2], [], ValueError),  # Cycles not nested
    ]
)
def test_dessin_document_error_cases(test_id, n, sigma, alpha, expected_exception):
    # Act and Assert
    with pytest.raises(expected_exception):
        DessinDocument(n=n, sigma=sigma, alpha=alpha)


def test_dessin_document_factory():
    # Act
    document = DessinDocumentFactory()

    # Assert
    assert 3 <= document.n <= 12
    assert document.sigma == [list(range(2, document.n + 1))]
    assert document.alpha == [[1, 2]]


def test_quotient_request_defaults():
    # Act
    request = QuotientRequest(dessin=DessinDocumentFactory(n=4))

    # Assert
    assert request.generators == [], "A request without generators should quotient by the trivial group"
    assert request.dessin.n == 4


def test_passport_schema_from_dict():
    # Act
    schema = PassportSchema(**{"black": [5, 1], "white": [2, 2, 1, 1], "faces": [5, 1]})

    # Assert
    assert sum(schema.black) == sum(schema.white) == sum(schema.faces) == 6


def test_verification_run_from_attributes():
    # Arrange
    created_at = datetime(2024, 1, 1, tzinfo=timezone.utc)
    run = models.VerificationRun(id=7, suite=Suite.CURVES, passed=True, created_at=created_at)
    run.checks = [
        models.CheckRecord(id=1, name="Z2 cubics", status=CheckStatus.PASS, details={"x=1": -6400}, wall_time=0.5)
    ]

    # Act
    schema = VerificationRun.model_validate(run)

    # Assert
    assert schema.id == 7
    assert schema.suite == Suite.CURVES
    assert schema.created_at == created_at
    assert schema.checks[0].details == {"x=1": -6400}
    assert schema.model_dump(mode="json")["suite"] == "curves"


def test_check_record_from_factory():
    # Arrange
    record = CheckRecordFactory(id=3)

    # Act
    schema = CheckRecord.model_validate(record)

    # Assert
    assert schema.id == 3
    assert schema.name == record.name
    assert schema.status in set(CheckStatus)
    assert schema.wall_time >= 0


@pytest.mark.parametrize(
    "test_id, status",
    [
        ("ERR_01", "passed"),
        ("ERR_02", "PASS"),
    ]
)
def test_check_record_error_cases(test_id, status):
    with pytest.raises(ValueError):
        CheckRecord(id=1, name="beta", status=status, wall_time=0.0)
