from datetime import datetime
from typing import Any

from pydantic import BaseModel, Field

from belyi.enums import CheckStatus, Suite


class DessinDocument(BaseModel):
    """
    Schema for a dessin given by its two rotations.

    Explanation:
    This class defines the JSON document of a dessin: the number of darts and the 1-based cycles of sigma and
        alpha. Fixed points may be omitted on input; they are always written out on output.

    Args:
        - n (int): Number of darts. Must be greater than 0.
        - sigma (list[list[int]]): Cycles of the black-vertex rotation.
        - alpha (list[list[int]]): Cycles of the white-vertex rotation.

    Returns:
        - No return value for class methods.

    Raises:
        - No exceptions raised for class methods.

    Examples:
        - No examples provided for a class.
    """
    n: int = Field(gt=0)
    sigma: list[list[int]]
    alpha: list[list[int]]


class QuotientRequest(BaseModel):
    """
    Schema for a quotient request: a dessin and generators of a group of its automorphisms, as 1-based cycles.
    """
    dessin: DessinDocument
    generators: list[list[list[int]]] = []


class IsomorphismRequest(BaseModel):
    first: DessinDocument
    second: DessinDocument


class PassportSchema(BaseModel):
    black: list[int]
    white: list[int]
    faces: list[int]


class DessinInfo(BaseModel):
    """
    Model representing the invariants of a dessin.

    Args:
        - n_darts (int): Number of darts.
        - genus (int): Genus of the surface.
        - passport (PassportSchema): Degree multisets.
        - passport_text (str): Passport as "{b|w|f}".
        - automorphism_order (int): Order of the automorphism group.
    """
    n_darts: int
    genus: int
    passport: PassportSchema
    passport_text: str
    automorphism_order: int


class CatalogNode(BaseModel):
    """
    Model representing one quotient of I4.

    Args:
        - group (str): Subgroup label.
        - order (int): Subgroup order.
        - darts (int): Darts of the quotient.
        - genus (int): Genus of the quotient.
        - passport (str): Passport text.
        - black, white, faces (list[int]): Degree multisets.
        - riemann_hurwitz (bool): Whether the Riemann-Hurwitz formula holds for the covering.
    """
    group: str
    order: int
    darts: int
    genus: int
    passport: str
    black: list[int]
    white: list[int]
    faces: list[int]
    riemann_hurwitz: bool


class CheckRecord(BaseModel):
    """
    Model representing the stored result of one check.

    Args:
        - id (int): The ID of the record.
        - name (str): The check title.
        - status (CheckStatus): pass, fail or error.
        - details (dict): Values and residuals.
        - wall_time (float): Seconds spent.
    """
    id: int
    name: str
    status: CheckStatus
    details: dict[str, Any] = {}
    wall_time: float

    class Config:
        from_attributes = True


class VerificationRun(BaseModel):
    """
    Model representing a stored suite run.

    Args:
        - id (int): The ID of the run.
        - suite (Suite): The suite that was run.
        - passed (bool): Whether every check passed.
        - created_at (datetime): When the run was stored.
        - checks (list[CheckRecord]): The stored results.
    """
    id: int
    suite: Suite
    passed: bool
    created_at: datetime
    checks: list[CheckRecord] = []

    class Config:
        from_attributes = True
