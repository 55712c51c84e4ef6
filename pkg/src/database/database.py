"""
Database Configuration
"""

from pathlib import Path

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import declarative_base, sessionmaker

from src.config.settings import DATABASE_URL


def make_engine(url: str) -> Engine:
    """Engine for a database URL; SQLite files get their parent directory created"""
    if url.startswith("sqlite:///") and url != "sqlite:///:memory:":
        Path(url[len("sqlite:///"):]).parent.mkdir(parents=True, exist_ok=True)
    return create_engine(
        url,
        connect_args={"check_same_thread": False} if "sqlite" in url else {}
    )


# Create engine
engine = make_engine(DATABASE_URL)

# Session maker
SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)

# Base class for models
Base = declarative_base()


def get_db():
    """
    Get database session

    Yields:
        Session: Database session
    """
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


def init_db(bind: Engine = None):
    """Create all archive tables"""
    Base.metadata.create_all(bind=bind or engine)
    print("✅ Database initialized")


def drop_db(bind: Engine = None):
    """Drop all tables (use with caution!)"""
    Base.metadata.drop_all(bind=bind or engine)
    print("⚠️  Database dropped")
