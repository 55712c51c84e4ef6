import json

import numpy as np
import pytest

from src.reports import ReportGenerator, ReportHasher
from src.reports.report_generator import encode_value, format_float
from src.utils.errors import DomainError

ROWS = [
    {"check": "lp.fenchel_young", "p": 3.0, "alpha": 1 / 3, "residual": 1.2e-16,
     "tolerance": 1e-10, "samples": 100, "pass": True},
    {"check": "divergence.worked_example", "p": 2.0, "alpha": 0.0, "residual": float("nan"),
     "tolerance": 5e-7, "samples": 1, "pass": False},
]
SUMMARY = {"total_checks": 2, "passed_checks": 1, "failed_checks": 1, "status": "FAILED"}


class TestFormatting:

    def test_seventeen_digits(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert float(format_float(1 / 3)) == 1 / 3

    @pytest.mark.parametrize("value,text", [
        (float("nan"), '"NaN"'),
        (float("inf"), '"Infinity"'),
        (float("-inf"), '"-Infinity"'),
    ])
    def test_non_finite(self, value, text):
        assert format_float(value) == text

    def test_encode_nested(self):
        text = encode_value({"a": [1, 2.5, None, True], "b": np.float64(0.25), "c": "x"})
        assert json.loads(text) == {"a": [1, 2.5, None, True], "b": 0.25, "c": "x"}


class TestReportGenerator:

    def test_json_lines(self):
        lines = ReportGenerator().render_json_lines(ROWS, SUMMARY).splitlines()
        assert len(lines) == 3
        first = json.loads(lines[0])
        assert first["check"] == "lp.fenchel_young"
        assert first["alpha"] == 1 / 3
        assert json.loads(lines[1])["residual"] == "NaN"
        assert json.loads(lines[2])["summary"]["status"] == "FAILED"

    def test_csv(self):
        lines = ReportGenerator().render_csv(ROWS, SUMMARY).splitlines()
        assert lines[0] == "check,p,alpha,residual,tolerance,samples,pass"
        assert lines[2].split(",")[3] == "NaN"
        assert lines[2].endswith(",false")
        assert lines[-1].startswith("# total_checks=2")

    def test_unknown_format(self):
        with pytest.raises(DomainError):
            ReportGenerator().render(ROWS, fmt="xml")

    def test_write(self, tmp_path):
        path = ReportGenerator().write(ROWS, str(tmp_path / "out" / "report.csv"), "csv")
        assert path.endswith("report.csv")
        assert (tmp_path / "out" / "report.csv").read_text().startswith("check,")


class TestReportHasher:

    def test_deterministic(self):
        hasher = ReportHasher()
        assert hasher.generate_hash(ROWS, {"seed": 1}) == hasher.generate_hash(list(reversed(ROWS)), {"seed": 1})
        assert len(hasher.generate_hash(ROWS, {"seed": 1})) == 64

    def test_sensitive_to_rows_and_config(self):
        hasher = ReportHasher()
        base = hasher.generate_hash(ROWS, {"seed": 1})
        changed = [dict(ROWS[0], residual=1.3e-16), ROWS[1]]
        assert hasher.generate_hash(changed, {"seed": 1}) != base
        assert hasher.generate_hash(ROWS, {"seed": 2}) != base

    def test_timestamp_only_when_requested(self):
        hasher = ReportHasher()
        plain = hasher.generate_hash(ROWS, {"seed": 1}, timestamp="2024-01-01T00:00:00")
        stamped = hasher.generate_hash(ROWS, {"seed": 1}, timestamp="2024-01-01T00:00:00", include_timestamp=True)
        assert plain == hasher.generate_hash(ROWS, {"seed": 1}, timestamp="2025-01-01T00:00:00")
        assert stamped != plain

    def test_config_hash_ignores_key_order(self):
        hasher = ReportHasher()
        assert hasher.config_hash({"a": 1, "b": [2]}) == hasher.config_hash({"b": [2], "a": 1})
