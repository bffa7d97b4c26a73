from unittest.mock import MagicMock

import pytest
from fastapi import HTTPException
from sqlalchemy import StaticPool, create_engine
from sqlalchemy.orm import Session, sessionmaker

from belyi.crud import create_run, get_run, get_runs
from belyi.enums import CheckStatus, Suite
from belyi.models import Base, CheckRecord, VerificationRun
from belyi.suites import CheckResult, VerificationReport


# Fixture to mock the database session
@pytest.fixture
def mock_db_session():
    return MagicMock(spec=Session)


@pytest.mark.parametrize(
    "run_id, expected_run",
    [
        (1, VerificationRun(id=1, suite=Suite.CURVES, passed=True)),  # Test ID: Happy-Path-1
        (2, VerificationRun(id=2, suite=Suite.ALL, passed=False)),  # Test ID: Happy-Path-2
    ],
    ids=["Happy-Path-1", "Happy-Path-2"]
)
def test_get_run_happy_path(mock_db_session, run_id, expected_run):
    # Arrange
    mock_db_session.query.return_value.filter.return_value.first.return_value = expected_run

    # Act
    result = get_run(mock_db_session, run_id)

    # Assert
    mock_db_session.query.assert_called_once_with(VerificationRun)
    mock_db_session.query.return_value.filter.assert_called_once()
    assert result == expected_run, f"Expected {expected_run}, got {result}"


def test_get_run_not_found(mock_db_session):
    # Arrange
    mock_db_session.query.return_value.filter.return_value.first.return_value = None

    # Act & Assert
    with pytest.raises(HTTPException) as exc_info:
        get_run(mock_db_session, 999)
    assert exc_info.value.status_code == 404, f"Expected status code 404, got {exc_info.value.status_code}"
    assert exc_info.value.detail == "Verification run not found"


def test_create_run_commits_and_refreshes(mock_db_session):
    # Arrange
    report = VerificationReport(
        Suite.BELYI,
        [CheckResult("beta", CheckStatus.PASS, {"degree": 12}, 0.1), CheckResult("diagram", CheckStatus.FAIL)],
    )

    # Act
    run = create_run(mock_db_session, Suite.BELYI, report)

    # Assert
    mock_db_session.add.assert_called_once_with(run)
    mock_db_session.commit.assert_called_once()
    mock_db_session.refresh.assert_called_once_with(run)
    assert run.suite == Suite.BELYI
    assert run.passed is False
    assert [check.name for check in run.checks] == ["beta", "diagram"]
    assert run.checks[0].details == {"degree": 12}


# Setup for the tests: creating an in-memory SQLite database and a session
TEST_SQLALCHEMY_DATABASE_URL = "sqlite:///:memory:"
test_engine = create_engine(
    TEST_SQLALCHEMY_DATABASE_URL,
    connect_args={"check_same_thread": False},
    poolclass=StaticPool,
)
TestingSessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=test_engine)


@pytest.fixture(scope="module")
def db_session():
    Base.metadata.create_all(bind=test_engine)
    db = TestingSessionLocal()
    try:
        yield db
    finally:
        db.close()


@pytest.fixture(scope="module")
def fill_db(db_session):
    # Pre-populate the database with ten runs alternating between suites
    suites = [Suite.CATALOG, Suite.CURVES]
    for i in range(10):
        report = VerificationReport(suites[i % 2], [CheckResult(f"check {i}", CheckStatus.PASS, {"index": i})])
        create_run(db_session, suites[i % 2], report)


@pytest.mark.parametrize("skip, limit, expected_count, test_id", [
    (0, 5, 5, "happy_path_5_runs"),
    (5, 5, 5, "happy_path_skip_5"),
    (0, 10, 10, "happy_path_all_runs"),
    (10, 5, 0, "edge_case_skip_all"),
    (0, 0, 0, "edge_case_no_limit"),
])
def test_get_runs(db_session, fill_db, skip, limit, expected_count, test_id):
    # Act
    result = get_runs(db_session, skip, limit)

    # Assert
    assert len(result) == expected_count, f"Test ID: {test_id} failed. Expected {expected_count} runs, got {len(result)}."


def test_get_runs_oldest_first(db_session, fill_db):
    # Act
    result = get_runs(db_session, 0, 3)

    # Assert
    assert [run.id for run in result] == sorted(run.id for run in result)
    assert [run.suite for run in result] == [Suite.CATALOG, Suite.CURVES, Suite.CATALOG]


def test_create_run_persists_checks(db_session):
    # Arrange
    report = VerificationReport(Suite.BRING, [CheckResult("residuals", CheckStatus.PASS, {"max": 1e-12}, 0.25)])

    # Act
    run = create_run(db_session, Suite.BRING, report)

    # Assert
    assert run.id is not None
    assert run.created_at is not None
    assert get_run(db_session, run.id) is run
    stored = db_session.query(CheckRecord).filter_by(run_id=run.id).one()
    assert stored.status == CheckStatus.PASS
    assert stored.details == {"max": 1e-12}
    assert stored.run is run
