"""
Response formatting utilities for verification reports and sequence tables.
Renders as aligned text, a single JSON document or CSV; output is byte-deterministic.
"""

import csv
import io
import json
from enum import Enum
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from src.bicomplex import Bicomplex
from src.identities import AXES, IdentitySpec, ParamGrid, VerificationReport
from src.ring import Scalar, render_scalar

CSV_HEADER = [
    "id", "mode", "n", "m", "r", "checked", "passed", "verdict",
    "failure_params", "lhs", "rhs", "discrepancy",
]

Term = Union[Scalar, Bicomplex]


class OutputFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class ReportFormatter:
    """Formatter for identity reports, audits and generated sequences"""

    def format_report(self, report: VerificationReport, fmt: OutputFormat) -> str:
        fmt = OutputFormat(fmt)
        if fmt is OutputFormat.JSON:
            return self._dump(self._report_dict(report))
        if fmt is OutputFormat.CSV:
            return self._csv([self._report_row(report)])
        return self._report_block(report)

    def format_audit(self, reports: Sequence[VerificationReport], mode: str, fmt: OutputFormat) -> str:
        fmt = OutputFormat(fmt)
        if fmt is OutputFormat.JSON:
            return self._dump({
                "mode": mode,
                "reports": [self._report_dict(r) for r in reports],
                "summary": self._summary(reports),
            })
        if fmt is OutputFormat.CSV:
            return self._csv(self._report_row(r) for r in reports)
        return self._audit_table(reports, mode)

    def format_sequence(self, seq: str, mode: str, rows: Iterable[Tuple[int, Term]], fmt: OutputFormat) -> str:
        """Render generated terms; rows are (index, scalar or bicomplex)"""
        fmt = OutputFormat(fmt)
        rows = list(rows)
        quaternion = any(isinstance(value, Bicomplex) for _, value in rows)

        if fmt is OutputFormat.JSON:
            terms = [
                {"n": str(n), "value": self._bicomplex_dict(v) if quaternion else render_scalar(v)}
                for n, v in rows
            ]
            return self._dump({"seq": seq, "mode": mode, "terms": terms})

        if fmt is OutputFormat.CSV:
            if quaternion:
                header = ["n", "w", "x", "y", "z"]
                body = [[str(n), *(render_scalar(c) for c in v.components())] for n, v in rows]
            else:
                header = ["n", "value"]
                body = [[str(n), render_scalar(v)] for n, v in rows]
            return self._csv(body, header)

        table = [(str(n), str(v)) for n, v in rows]
        return self._align([("n", seq)] + table)

    def format_registry(self, specs: Iterable[IdentitySpec]) -> str:
        rows = [("id", "params", "default grid", "extended", "equation")]
        for spec in specs:
            rows.append((
                spec.identity.value,
                ",".join(spec.params),
                self._ranges_text(spec.default),
                self._ranges_text(spec.extended) if spec.extended else "-",
                spec.equation,
            ))
        return self._align(rows)

    # --- JSON -----------------------------------------------------------------

    def _dump(self, document: Dict[str, Any]) -> str:
        return json.dumps(document, indent=2, ensure_ascii=False) + "\n"

    def _bicomplex_dict(self, value: Bicomplex) -> Dict[str, str]:
        return {name: render_scalar(c) for name, c in zip("wxyz", value.components())}

    def _report_dict(self, report: VerificationReport) -> Dict[str, Any]:
        data = {
            "id": report.identity.value,
            "mode": report.grid.mode,
            "grid": {axis: str(rng) for axis, rng in report.grid.axes().items()},
            "checked": str(report.checked),
            "passed": str(report.passed),
            "verdict": report.verdict,
        }
        failure = report.first_failure
        if failure is not None:
            data["first_failure"] = {
                "params": {axis: str(v) for axis, v in failure.params.items()},
                "lhs": self._bicomplex_dict(failure.lhs),
                "rhs": self._bicomplex_dict(failure.rhs),
                "discrepancy": self._bicomplex_dict(failure.discrepancy),
            }
        return data

    def _summary(self, reports: Sequence[VerificationReport]) -> Dict[str, Any]:
        ids = list(dict.fromkeys(r.identity.value for r in reports))
        failing = list(dict.fromkeys(r.identity.value for r in reports if not r.holds))
        return {
            "checked_ids": str(len(ids)),
            "passing_ids": str(len(ids) - len(failing)),
            "failing_ids": failing,
        }

    # --- CSV ------------------------------------------------------------------

    def _csv(self, rows: Iterable[List[str]], header: List[str] = CSV_HEADER) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    def _report_row(self, report: VerificationReport) -> List[str]:
        axes = report.grid.axes()
        failure = report.first_failure
        row = [
            report.identity.value,
            report.grid.mode,
            *(str(axes[axis]) if axis in axes else "" for axis in AXES),
            str(report.checked),
            str(report.passed),
            report.verdict,
        ]
        if failure is None:
            row += ["", "", "", ""]
        else:
            row += [
                self._params_text(failure.params),
                str(failure.lhs),
                str(failure.rhs),
                str(failure.discrepancy),
            ]
        return row

    # --- table ----------------------------------------------------------------

    def _report_block(self, report: VerificationReport) -> str:
        lines = [
            f"{report.identity.value}  k={report.grid.mode}  {self._grid_text(report.grid)}",
            f"  checked: {report.checked}  passed: {report.passed}  verdict: {report.verdict}",
        ]
        failure = report.first_failure
        if failure is not None:
            lines += [
                f"  first failure at {self._params_text(failure.params)}",
                f"    lhs:         {failure.lhs}",
                f"    rhs:         {failure.rhs}",
                f"    discrepancy: {failure.discrepancy}",
            ]
        return "\n".join(lines) + "\n"

    def _audit_table(self, reports: Sequence[VerificationReport], mode: str) -> str:
        rows = [("id", "grid", "checked", "passed", "verdict")]
        for r in reports:
            rows.append((
                r.identity.value, self._grid_text(r.grid),
                str(r.checked), str(r.passed), r.verdict,
            ))
        text = f"Identity audit, k={mode}\n\n" + self._align(rows)

        failing = [r for r in reports if not r.holds]
        for r in failing:
            text += "\n" + self._report_block(r)

        summary = self._summary(reports)
        text += (
            f"\n{summary['passing_ids']}/{summary['checked_ids']} identities hold"
            f"; failing: {', '.join(summary['failing_ids']) or 'none'}\n"
        )
        return text

    def _align(self, rows: List[Tuple[str, ...]]) -> str:
        widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
        return "\n".join(lines) + "\n"

    def _grid_text(self, grid: ParamGrid) -> str:
        return ", ".join(f"{axis}={rng}" for axis, rng in grid.axes().items())

    def _ranges_text(self, ranges: Dict[str, Tuple[int, int]]) -> str:
        return ", ".join(f"{axis}={lo}..{hi}" for axis, (lo, hi) in ranges.items())

    def _params_text(self, params: Dict[str, int]) -> str:
        return ", ".join(f"{axis}={value}" for axis, value in params.items())
