from typing import Type

from fastapi import Depends, FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from sqlalchemy.exc import SQLAlchemyError
from sqlalchemy.orm import Session

from belyi.crud import create_run, get_run, get_runs
from belyi.database import SessionLocal, engine
from belyi.dessin import (
    Dessin,
    are_isomorphic,
    automorphism_group,
    dual,
    from_document,
    genus,
    passport,
    quotient,
    to_document,
)
from belyi.enums import Suite
from belyi.exceptions import BelyiError
from belyi.icosa_catalog import build_diagram, diagram_dot, family_json
from belyi.models import Base
from belyi.perm_core import Permutation
from belyi.schemas import (
    CatalogNode,
    DessinDocument,
    DessinInfo,
    IsomorphismRequest,
    QuotientRequest,
    VerificationRun,
)
from belyi.suites import run_suite


# Create FastAPI instance
app = FastAPI()

# Create tables
Base.metadata.create_all(bind=engine)


# Dependency to get DB session
def get_db() -> Session:
    """
    Get a database session.

    Explanation:
    This function yields a database session and closes it once the request is handled.

    Yields:
        - Session: The database session object.

    Raises:
        - HTTPException: If there is an error while creating the database session.
    """
    db = None
    try:
        db: Session | None = SessionLocal()
        yield db
    except SQLAlchemyError as e:
        raise HTTPException(status_code=500, detail="Database error") from e
    finally:
        if db:
            db.close()


def _load(document: DessinDocument) -> Dessin:
    try:
        return from_document(document)
    except (BelyiError, ValueError) as e:
        raise HTTPException(status_code=422, detail=str(e)) from e


# Define endpoints
@app.get("/")
def index() -> dict:
    return {"msg": "Belyi verification service"}


@app.post("/dessins/info", response_model=DessinInfo)
def dessin_info_endpoint(document: DessinDocument) -> DessinInfo:
    """
    Compute the passport, genus and automorphism group order of a dessin.

    Args:
        - document (DessinDocument): The dessin.

    Returns:
        - DessinInfo: Its invariants.

    Raises:
        - HTTPException: 422 if the document does not describe a connected dessin.
    """
    d = _load(document)
    p = passport(d)
    return DessinInfo(
        n_darts=d.n_darts,
        genus=genus(d),
        passport=p.as_lists(),
        passport_text=str(p),
        automorphism_order=automorphism_group(d).order,
    )


@app.post("/dessins/dual", response_model=DessinDocument)
def dessin_dual_endpoint(document: DessinDocument) -> dict:
    return to_document(dual(_load(document)))


@app.post("/dessins/quotient", response_model=DessinDocument)
def dessin_quotient_endpoint(request: QuotientRequest) -> dict:
    """
    Quotient a dessin by the group generated by the given automorphisms.

    Raises:
        - HTTPException: 422 if a generator is malformed or is not an automorphism.
    """
    d = _load(request.dessin)
    try:
        generators = [Permutation.from_cycles(cycles, d.n_darts) for cycles in request.generators]
        return to_document(quotient(d, generators))
    except (BelyiError, ValueError) as e:
        raise HTTPException(status_code=422, detail=str(e)) from e


@app.post("/dessins/isomorphic")
def dessin_isomorphic_endpoint(request: IsomorphismRequest) -> dict:
    return {"isomorphic": are_isomorphic(_load(request.first), _load(request.second))}


@app.get("/catalog/family", response_model=list[CatalogNode])
def catalog_family_endpoint() -> list[dict]:
    return family_json()


@app.get("/catalog/diagram", response_class=PlainTextResponse)
def catalog_diagram_endpoint() -> str:
    return diagram_dot(build_diagram())


@app.post("/verifications/{suite}", response_model=VerificationRun)
def run_verification_endpoint(suite: Suite, db: Session = Depends(get_db)) -> VerificationRun:
    """
    Run a suite, store the run and return it.

    Args:
        - suite (Suite): catalog, belyi, curves, bring or all.
        - db (Session): The database session object.

    Returns:
        - VerificationRun: The stored run with its check records.
    """
    return create_run(db=db, suite=suite, report=run_suite(suite))


@app.get("/verifications/", response_model=list[VerificationRun])
def get_verifications_endpoint(skip: int = 0, limit: int = 100, db: Session = Depends(get_db)) -> list[Type[VerificationRun]]:
    return get_runs(db=db, skip=skip, limit=limit)


@app.get("/verifications/{run_id}", response_model=VerificationRun)
def get_verification_endpoint(run_id: int, db: Session = Depends(get_db)) -> VerificationRun:
    """
    Retrieve a stored run.

    Raises:
        - HTTPException: 404 if no run has the given ID.
    """
    return get_run(db=db, run_id=run_id)
