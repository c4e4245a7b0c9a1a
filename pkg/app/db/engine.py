"""Engine for the catalog store (SQLite by default, any SQLAlchemy URL works)."""
from typing import Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine, make_url
from sqlalchemy.pool import StaticPool

from app.config import DATABASE_URL


def make_engine(database_url: Optional[str] = None) -> Engine:
    database_url = database_url or DATABASE_URL
    if not database_url:
        raise RuntimeError("DATABASE_URL not set")
    url = make_url(database_url)
    if url.get_backend_name() == "sqlite" and url.database in (None, "", ":memory:"):
        # an in-memory database lives in one connection; share it across threads
        return create_engine(url, connect_args={"check_same_thread": False}, poolclass=StaticPool)
    return create_engine(url)


def init_orm(engine: Optional[Engine] = None) -> Engine:
    """Create the catalog tables if they are missing."""
    from app.db.models import Base

    engine = engine or make_engine()
    Base.metadata.create_all(engine)
    return engine
