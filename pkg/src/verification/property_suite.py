"""
Property Suite
Runs the named numerical checks and tallies them into a suite report
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List

from src.utils.errors import DomainError
from src.utils.sampling import check_rng
from .checks import CHECKS, CheckContext
from .suite_config import SuiteConfig

logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    """Report rows sorted by check name plus pass/fail counters"""

    rows: List[Dict]
    config: Dict
    total_checks: int = 0
    passed_checks: int = 0
    failed_checks: int = 0
    match_score: int = 0
    timestamp: str = field(default_factory=lambda: datetime.now().isoformat())

    @property
    def passed(self) -> bool:
        return self.failed_checks == 0

    @property
    def failures(self) -> List[Dict]:
        return [row for row in self.rows if not row["pass"]]

    def summary(self) -> Dict:
        return {
            "total_checks": self.total_checks,
            "passed_checks": self.passed_checks,
            "failed_checks": self.failed_checks,
            "match_score": self.match_score,
            "status": "PASSED" if self.passed else "FAILED",
            "timestamp": self.timestamp,
        }


class PropertySuite:
    """Run every selected check with its own generator derived from (seed, name)"""

    def __init__(self, config: SuiteConfig = None, verbose: bool = True):
        self.config = config or SuiteConfig()
        self.verbose = verbose

    def selected_checks(self) -> List[str]:
        if self.config.checks is None:
            return sorted(CHECKS)
        unknown = [name for name in self.config.checks if name not in CHECKS]
        if unknown:
            raise DomainError(f"unknown checks: {', '.join(unknown)}")
        return sorted(set(self.config.checks))

    def run_check(self, name: str) -> List[Dict]:
        ctx = CheckContext(
            name=name,
            config=self.config,
            rng=check_rng(self.config.seed, name),
            samples=self.config.samples_for(name),
            tolerance=self.config.tolerance_for(name),
        )
        logger.debug("running %s with %d samples", name, ctx.samples)
        return CHECKS[name](ctx)

    def run(self) -> SuiteReport:
        """
        Run the suite

        Returns:
            SuiteReport: rows ordered by check name, never by completion time
        """
        names = self.selected_checks()
        if self.verbose:
            print("\n" + "=" * 70)
            print("PROPERTY VERIFICATION SUITE")
            print("=" * 70)
            print(f"   Seed: {self.config.seed}")
            print(f"   Checks: {len(names)}")

        if self.config.workers > 1:
            with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
                results = dict(zip(names, pool.map(self.run_check, names)))
        else:
            results = {name: self.run_check(name) for name in names}

        rows = []
        for name in names:
            rows.extend(results[name])
            if self.verbose:
                self._print_check(name, results[name])

        report = SuiteReport(rows=rows, config=self.config.hashable_dict())
        report.total_checks = len(rows)
        report.passed_checks = sum(1 for row in rows if row["pass"])
        report.failed_checks = report.total_checks - report.passed_checks
        if report.total_checks > 0:
            report.match_score = round(report.passed_checks / report.total_checks * 100)

        if self.verbose:
            self._print_summary(report)
        return report

    def _print_check(self, name: str, rows: List[Dict]):
        failed = [row for row in rows if not row["pass"]]
        worst = max(row["residual"] for row in rows) if rows else 0.0
        marker = "✅" if not failed else "❌"
        print(f"{marker} {name:<36} rows={len(rows):<3} worst residual={worst:.3e}")

    def _print_summary(self, report: SuiteReport):
        print("\n" + "=" * 70)
        print("📊 SUITE SUMMARY")
        print("=" * 70)
        print(f"   Total: {report.total_checks}")
        print(f"   Passed: {report.passed_checks}")
        print(f"   Failed: {report.failed_checks}")
        print(f"   Match Score: {report.match_score}%")
        for row in report.failures:
            print(f"   ⚠️  {row['check']} (p={row['p']}, alpha={row['alpha']}): "
                  f"{row['residual']:.3e} > {row['tolerance']:.1e}")
        print("=" * 70)
