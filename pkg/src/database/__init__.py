"""
Database Package
"""

from .database import Base, engine, SessionLocal, get_db, init_db, drop_db, make_engine
from .models import SuiteRun, CheckRecord, AuditLog
from . import crud

__all__ = [
    "Base",
    "engine",
    "SessionLocal",
    "get_db",
    "init_db",
    "drop_db",
    "make_engine",
    "SuiteRun",
    "CheckRecord",
    "AuditLog",
    "crud"
]
