from datetime import datetime, timezone

from sqlalchemy import JSON, Boolean, Column, DateTime, Enum, Float, ForeignKey, Integer, String
from sqlalchemy.orm import relationship

from belyi.database import Base
from belyi.enums import CheckStatus, Suite


class VerificationRun(Base):
    """
    Model representing one stored run of a verification suite.

    Explanation:
    This class defines a run with attributes such as id, suite, passed and created_at.
    It also establishes a relationship with the CheckRecord model.

    Args:
        - No arguments required for class methods.

    Attributes:
        - id (int): The primary key of the run.
        - suite (enum): The suite that was run.
        - passed (bool): Whether every check of the run passed.
        - created_at (datetime): When the run was stored.
        - checks (relationship): A relationship to the CheckRecord model.

    Returns:
        - No return value for class methods.

    Raises:
        - No exceptions raised for class methods.

    Examples:
        - No examples provided for a class.
    """

    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, index=True)
    suite = Column(Enum(Suite), nullable=False)
    passed = Column(Boolean, default=False)
    created_at = Column(DateTime, default=lambda: datetime.now(timezone.utc))

    checks = relationship("CheckRecord", back_populates="run", cascade="all, delete-orphan")


class CheckRecord(Base):
    """
    Model representing the stored result of one check.

    Attributes:
        - id (int): The primary key of the record.
        - run_id (int): The foreign key referencing the run.
        - name (str): The check title.
        - status (enum): pass, fail or error.
        - details (JSON): Values and residuals reported by the check.
        - wall_time (float): Seconds spent.
    """

    __tablename__ = "check_records"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("verification_runs.id"))
    name = Column(String, nullable=False)
    status = Column(Enum(CheckStatus), nullable=False)
    details = Column(JSON, default=dict)
    wall_time = Column(Float, default=0.0)

    run = relationship("VerificationRun", back_populates="checks")
