"""
CRUD Operations for the Report Archive
"""

from typing import Any, Dict, List, Optional

from sqlalchemy.orm import Session

from . import models


# ============= Suite Run CRUD =============

def create_suite_run(
    db: Session,
    run_id: str,
    seed: int,
    config_hash: str,
    report_hash: str,
    summary: Dict[str, Any],
    rows: List[Dict[str, Any]],
    config: Dict[str, Any] = None
) -> models.SuiteRun:
    """Store a run together with one CheckRecord per report row"""
    db_run = models.SuiteRun(
        run_id=run_id,
        seed=seed,
        config_hash=config_hash,
        report_hash=report_hash,
        total_checks=summary["total_checks"],
        passed_checks=summary["passed_checks"],
        failed_checks=summary["failed_checks"],
        match_score=summary.get("match_score"),
        passed=summary["failed_checks"] == 0,
        config_json=config,
    )
    for row in rows:
        db_run.checks.append(models.CheckRecord(
            check_name=row["check"],
            p=row["p"],
            alpha=row["alpha"],
            residual=row["residual"],
            tolerance=row["tolerance"],
            samples=row["samples"],
            passed=row["pass"],
        ))
    db.add(db_run)
    db.commit()
    db.refresh(db_run)
    return db_run


def get_suite_run(db: Session, run_id: str) -> Optional[models.SuiteRun]:
    """Get run by ID"""
    return db.query(models.SuiteRun).filter(
        models.SuiteRun.run_id == run_id
    ).first()


def get_latest_run_for_config(db: Session, config_hash: str) -> Optional[models.SuiteRun]:
    """Most recent run recorded with the given config hash"""
    return db.query(models.SuiteRun).filter(
        models.SuiteRun.config_hash == config_hash
    ).order_by(models.SuiteRun.created_at.desc(), models.SuiteRun.id.desc()).first()


def get_suite_runs(db: Session, skip: int = 0, limit: int = 100) -> List[models.SuiteRun]:
    """Get all runs, newest first"""
    return db.query(models.SuiteRun).order_by(
        models.SuiteRun.id.desc()
    ).offset(skip).limit(limit).all()


def get_failed_checks(db: Session, run_id: str) -> List[models.CheckRecord]:
    return db.query(models.CheckRecord).filter(
        models.CheckRecord.run_id == run_id,
        models.CheckRecord.passed.is_(False)
    ).all()


# ============= Audit Log =============

def create_audit_log(
    db: Session,
    operation_type: str,
    status: str,
    run_id: str = None,
    message: str = None,
    metadata: Dict[str, Any] = None
) -> models.AuditLog:
    """Create audit log entry"""
    db_log = models.AuditLog(
        operation_type=operation_type,
        run_id=run_id,
        status=status,
        message=message,
        metadata_json=metadata
    )
    db.add(db_log)
    db.commit()
    db.refresh(db_log)
    return db_log


def get_audit_logs(
    db: Session,
    run_id: str = None,
    operation_type: str = None,
    skip: int = 0,
    limit: int = 100
) -> List[models.AuditLog]:
    """Get audit logs with optional filters"""
    query = db.query(models.AuditLog)

    if run_id:
        query = query.filter(models.AuditLog.run_id == run_id)
    if operation_type:
        query = query.filter(models.AuditLog.operation_type == operation_type)

    return query.order_by(models.AuditLog.timestamp.desc()).offset(skip).limit(limit).all()
