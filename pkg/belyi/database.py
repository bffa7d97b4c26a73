from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from belyi.config import get_settings


def connect_args_for(url: str) -> dict:
    """``check_same_thread`` is a SQLite-only argument."""
    return {"check_same_thread": False} if url.startswith("sqlite") else {}


SQLALCHEMY_DATABASE_URL: str = get_settings().database_url
engine = create_engine(
    SQLALCHEMY_DATABASE_URL, connect_args=connect_args_for(SQLALCHEMY_DATABASE_URL)
)
SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)
# Define Base class for SQLAlchemy models
Base = declarative_base()
