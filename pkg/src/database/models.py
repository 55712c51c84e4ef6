"""
Database Models for the Report Archive
"""

from datetime import datetime

from sqlalchemy import Boolean, Column, DateTime, Float, ForeignKey, Integer, JSON, String, Text
from sqlalchemy.orm import relationship

from .database import Base


class SuiteRun(Base):
    """One archived verify run"""
    __tablename__ = "suite_runs"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(String(100), unique=True, index=True, nullable=False)
    seed = Column(Integer, nullable=False)

    # Reproducibility fingerprints (SHA-256 hex, timestamp excluded)
    config_hash = Column(String(64), index=True, nullable=False)
    report_hash = Column(String(64), nullable=False)

    # Counters
    total_checks = Column(Integer, nullable=False)
    passed_checks = Column(Integer, nullable=False)
    failed_checks = Column(Integer, nullable=False)
    match_score = Column(Integer)
    passed = Column(Boolean, nullable=False)

    config_json = Column(JSON)
    created_at = Column(DateTime, default=datetime.utcnow, index=True)

    checks = relationship("CheckRecord", back_populates="run", cascade="all, delete-orphan")

    def __repr__(self):
        return f"<SuiteRun(run_id='{self.run_id}', passed={self.passed})>"


class CheckRecord(Base):
    """One report row of an archived run"""
    __tablename__ = "check_records"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(String(100), ForeignKey("suite_runs.run_id"), nullable=False, index=True)

    check_name = Column(String(100), nullable=False)
    p = Column(Float)
    alpha = Column(Float)
    residual = Column(Float)
    tolerance = Column(Float)
    samples = Column(Integer)
    passed = Column(Boolean, nullable=False)

    run = relationship("SuiteRun", back_populates="checks")

    def __repr__(self):
        return f"<CheckRecord(check_name='{self.check_name}', passed={self.passed})>"


class AuditLog(Base):
    """Audit log for archive operations"""
    __tablename__ = "audit_logs"

    id = Column(Integer, primary_key=True, index=True)
    timestamp = Column(DateTime, default=datetime.utcnow, index=True)

    operation_type = Column(String(50), nullable=False)  # RECORD, COMPARE_BASELINE
    run_id = Column(String(100))

    status = Column(String(50))  # SUCCESS, FAILED, WARNING
    message = Column(Text)

    metadata_json = Column(JSON)

    def __repr__(self):
        return f"<AuditLog(operation='{self.operation_type}', status='{self.status}')>"
