"""
Report Generator
Writes suite reports as JSON lines or CSV with 17 significant digits
"""

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Dict, List

import numpy as np

from src.utils.errors import DomainError
from src.utils.file_utils import FileUtils

REPORT_COLUMNS = ["check", "p", "alpha", "residual", "tolerance", "samples", "pass"]


def format_float(value: float) -> str:
    """17 significant digits; non-finite values become strings"""
    if math.isnan(value):
        return '"NaN"'
    if math.isinf(value):
        return '"Infinity"' if value > 0 else '"-Infinity"'
    return format(value, ".17g")


def encode_value(value: Any) -> str:
    """JSON text for a report cell, floats rendered by format_float"""
    if isinstance(value, np.generic):
        value = value.item()
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {encode_value(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(encode_value(v) for v in value) + "]"
    return json.dumps(str(value), ensure_ascii=False)


class ReportGenerator:
    """Render report rows; the summary (with its timestamp) always comes last"""

    def render_json_lines(self, rows: List[Dict], summary: Dict = None) -> str:
        lines = [encode_value({key: row[key] for key in REPORT_COLUMNS}) for row in rows]
        if summary is not None:
            lines.append(encode_value({"summary": summary}))
        return "\n".join(lines) + "\n"

    def render_csv(self, rows: List[Dict], summary: Dict = None) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for row in rows:
            writer.writerow([self._csv_cell(row[key]) for key in REPORT_COLUMNS])
        if summary is not None:
            buffer.write("# " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
        return buffer.getvalue()

    def render(self, rows: List[Dict], summary: Dict = None, fmt: str = "json") -> str:
        if fmt == "json":
            return self.render_json_lines(rows, summary)
        if fmt == "csv":
            return self.render_csv(rows, summary)
        raise DomainError(f"unknown report format: {fmt}")

    def write(self, rows: List[Dict], path: str, fmt: str = "json", summary: Dict = None) -> str:
        """
        Write a report file

        Args:
            rows: report rows
            path: output file
            fmt: "json" (JSON lines) or "csv"
            summary: optional trailing summary record

        Returns:
            Absolute path of the written report
        """
        FileUtils.write_text(self.render(rows, summary, fmt), path)
        output = Path(path).absolute()
        print(f"\n✅ Report written: {output}")
        return str(output)

    @staticmethod
    def _csv_cell(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, float):
            return format_float(value).strip('"')
        return str(value)
