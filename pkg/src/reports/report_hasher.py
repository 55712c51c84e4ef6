"""
Report Hasher Module
Generates deterministic SHA-256 hashes of suite reports
"""

import hashlib
import json
from datetime import datetime
from typing import Any, Dict, List

from .report_generator import REPORT_COLUMNS, format_float


class ReportHasher:
    """Generate reproducibility fingerprints for suite reports"""

    def __init__(self):
        self.encoding = 'utf-8'

    def normalize_rows(self, rows: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
        """Rows sorted by (check, p, alpha) with floats at 17 significant digits"""
        normalized = []
        for row in rows:
            entry = {}
            for key in REPORT_COLUMNS:
                value = row.get(key)
                entry[key] = format_float(value) if isinstance(value, float) else value
            normalized.append(entry)
        return sorted(normalized, key=lambda r: (r["check"], str(r["p"]), str(r["alpha"])))

    def normalize_config(self, config: Dict[str, Any]) -> str:
        return json.dumps(config, sort_keys=True, ensure_ascii=False, default=str)

    def config_hash(self, config: Dict[str, Any]) -> str:
        return hashlib.sha256(self.normalize_config(config).encode(self.encoding)).hexdigest()

    def generate_hash(
        self,
        rows: List[Dict[str, Any]],
        config: Dict[str, Any],
        timestamp: str = None,
        include_timestamp: bool = False
    ) -> str:
        """
        SHA-256 over the normalized rows and config

        Args:
            rows: report rows
            config: the config the rows were produced with
            timestamp: run timestamp
            include_timestamp: off for reproducibility comparisons

        Returns:
            str: SHA-256 hash (hex string)
        """
        payload = {
            "config": self.normalize_config(config),
            "rows": self.normalize_rows(rows),
        }
        if include_timestamp:
            payload["timestamp"] = timestamp or datetime.now().isoformat()
        json_string = json.dumps(payload, sort_keys=True, ensure_ascii=False)
        return hashlib.sha256(json_string.encode(self.encoding)).hexdigest()

    def digest(self, report) -> str:
        """Timestamp-free hash of a SuiteReport"""
        return self.generate_hash(report.rows, report.config)

    def verify_hash(self, report, expected_hash: str) -> bool:
        return self.digest(report) == expected_hash
