import pytest

from belyi.database import SQLALCHEMY_DATABASE_URL, connect_args_for, engine


@pytest.mark.parametrize(
    "url, expected",
    [
        ("sqlite:///belyi_verifications.db", {"check_same_thread": False}),  # Test ID: HP-sqlite-file
        ("sqlite://", {"check_same_thread": False}),  # Test ID: HP-sqlite-memory
        ("postgresql://belyi@localhost/runs", {}),  # Test ID: EC-postgresql
        ("mysql+pymysql://belyi@localhost/runs", {}),  # Test ID: EC-mysql
    ],
    ids=["HP-sqlite-file", "HP-sqlite-memory", "EC-postgresql", "EC-mysql"],
)
def test_connect_args_for(url, expected):
    assert connect_args_for(url) == expected, f"Unexpected connect_args for {url}"


def test_engine_uses_configured_url():
    assert str(engine.url) == SQLALCHEMY_DATABASE_URL
