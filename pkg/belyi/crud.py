from typing import Type

from fastapi import HTTPException
from sqlalchemy.orm import Session

from belyi.enums import Suite
from belyi.models import CheckRecord, VerificationRun
from belyi.suites import VerificationReport


def create_run(db: Session, suite: Suite, report: VerificationReport) -> VerificationRun:
    """
    Store a suite run and its check results.

    Explanation:
    This function creates a VerificationRun with one CheckRecord per check of the report, adds it to the
        database session, commits the changes, refreshes the run object and returns it.

    Args:
        - db (Session): The database session object.
        - suite (Suite): The suite that was run.
        - report (VerificationReport): The results to store.

    Returns:
        - VerificationRun: The newly created run.

    Raises:
        - No exceptions raised by this function.

    Examples:
        - No examples provided for a function.
    """
    db_run: VerificationRun = VerificationRun(suite=suite, passed=report.passed)
    db_run.checks = [
        CheckRecord(name=check.name, status=check.status, details=check.details, wall_time=check.wall_time)
        for check in report.checks
    ]
    db.add(db_run)
    db.commit()
    db.refresh(db_run)
    return db_run


# noinspection PyTypeChecker
def get_run(db: Session, run_id: int) -> VerificationRun:
    """
    Retrieve a stored run by ID.

    Args:
        - db (Session): The database session object.
        - run_id (int): The ID of the run to retrieve.

    Returns:
        - VerificationRun: The run.

    Raises:
        - HTTPException: If no run has the given ID.
    """
    if db_run := db.query(VerificationRun).filter(VerificationRun.id == run_id).first():
        return db_run
    raise HTTPException(status_code=404, detail="Verification run not found")


def get_runs(db: Session, skip: int = 0, limit: int = 100) -> list[Type[VerificationRun]]:
    """Stored runs, oldest first, with pagination."""
    return db.query(VerificationRun).order_by(VerificationRun.id).offset(skip).limit(limit).all()
