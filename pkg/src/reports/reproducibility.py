"""
Reproducibility Checker
Compares a fresh suite report with the archived baseline run for the same config
"""

import uuid
from datetime import datetime
from typing import Any, Dict

from sqlalchemy.orm import Session

from src.database import crud
from .report_hasher import ReportHasher


class ReproducibilityChecker:
    """Record suite runs and detect drift against the archive"""

    def __init__(self, db: Session, hasher: ReportHasher = None):
        self.db = db
        self.hasher = hasher or ReportHasher()

    def record(self, report) -> Dict[str, Any]:
        """
        Archive a report

        Returns:
            dict: {"run_id", "config_hash", "report_hash"}
        """
        config_hash = self.hasher.config_hash(report.config)
        report_hash = self.hasher.digest(report)
        run_id = f"RUN-{uuid.uuid4().hex[:12]}"
        crud.create_suite_run(
            self.db,
            run_id=run_id,
            seed=int(report.config.get("seed", 0)),
            config_hash=config_hash,
            report_hash=report_hash,
            summary=report.summary(),
            rows=report.rows,
            config=report.config,
        )
        crud.create_audit_log(
            self.db,
            operation_type="RECORD",
            status="SUCCESS" if report.passed else "WARNING",
            run_id=run_id,
            message=f"{report.passed_checks}/{report.total_checks} checks passed",
            metadata={"report_hash": report_hash},
        )
        print(f"✅ Run archived as {run_id} (hash {report_hash[:16]}...)")
        return {"run_id": run_id, "config_hash": config_hash, "report_hash": report_hash}

    def check(self, report) -> Dict[str, Any]:
        """
        Compare a report with the latest archived run of the same config

        Returns:
            dict: {"match_status": REPRODUCED | DRIFT | NOT_FOUND, "hash_matched", ...}
        """
        print("\n" + "=" * 70)
        print("REPRODUCIBILITY CHECK")
        print("=" * 70)

        config_hash = self.hasher.config_hash(report.config)
        results = {
            "match_status": "UNKNOWN",
            "config_hash": config_hash,
            "current_hash": self.hasher.digest(report),
            "baseline_hash": None,
            "baseline_run_id": None,
            "hash_matched": False,
            "changed_checks": [],
            "checked_at": datetime.now().isoformat(),
            "warnings": [],
        }

        baseline = crud.get_latest_run_for_config(self.db, config_hash)
        if baseline is None:
            results["match_status"] = "NOT_FOUND"
            results["warnings"].append("No archived run with this config. Record one with --record.")
            print("⚠️  No baseline found for this config")
            return results

        results["baseline_hash"] = baseline.report_hash
        results["baseline_run_id"] = baseline.run_id
        print(f"📜 Baseline: {baseline.run_id}")
        print(f"   Hash: {baseline.report_hash[:16]}...")
        print(f"🔍 Current hash: {results['current_hash'][:16]}...")

        results["hash_matched"] = results["current_hash"] == baseline.report_hash
        if results["hash_matched"]:
            results["match_status"] = "REPRODUCED"
            print("\n✅ REPRODUCED: report identical to baseline")
        else:
            results["match_status"] = "DRIFT"
            baseline_pass = {(c.check_name, c.p, c.alpha): c.passed for c in baseline.checks}
            for row in report.rows:
                key = (row["check"], row["p"], row["alpha"])
                if baseline_pass.get(key) != row["pass"]:
                    results["changed_checks"].append(row["check"])
            results["warnings"].append("Report differs from the archived baseline.")
            print("\n❌ DRIFT: report differs from baseline")
            for name in results["changed_checks"]:
                print(f"   ⚠️  pass/fail changed: {name}")

        crud.create_audit_log(
            self.db,
            operation_type="COMPARE_BASELINE",
            status="SUCCESS" if results["hash_matched"] else "FAILED",
            run_id=baseline.run_id,
            message=results["match_status"],
            metadata={"current_hash": results["current_hash"]},
        )
        return results
