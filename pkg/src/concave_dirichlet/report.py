"""Structured verification records and their JSON / CSV encodings."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Sequence


@dataclass
class VerificationReport:
    """Outcome of one checked claim.

    For bound claims ``worst_ratio`` is the largest observed
    ``value / bound`` and the claim passes iff it is ``<= 1 + tolerance``.
    For equality claims ``worst_ratio`` holds the largest deviation and the
    claim passes iff it is ``<= tolerance``.  Informational reports never
    fail a run.
    """

    claim_id: str
    params: dict
    value: float | None
    bound: float | None
    worst_ratio: float
    worst_point: Any
    passed: bool
    tolerance: float
    kind: str = "bound"
    informational: bool = False
    skipped: list = field(default_factory=list)
    notes: str = ""
    runtime_ms: int = 0

    def to_dict(self) -> dict:
        # runtime_ms is left out so reports compare byte for byte
        return {
            "claim_id": self.claim_id,
            "params": _jsonable(self.params),
            "value": _jsonable(self.value),
            "bound": _jsonable(self.bound),
            "ratio": _jsonable(self.worst_ratio),
            "pass": bool(self.passed),
            "tolerance": self.tolerance,
            "kind": self.kind,
            "informational": self.informational,
            "worst_point": _jsonable(self.worst_point),
            "skipped": _jsonable(self.skipped),
            "notes": self.notes,
        }

    def summary_line(self) -> str:
        status = "INFO" if self.informational else ("PASS" if self.passed else "FAIL")
        return f"[{status}] {self.claim_id}: ratio={_fmt(self.worst_ratio)} tol={self.tolerance:g}"


def _fmt(v):
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return {"re": _jsonable(obj.real), "im": _jsonable(obj.imag)}
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return _jsonable(obj.item())
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def reports_to_json(reports: Sequence[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=False) + "\n"


CSV_COLUMNS = ["claim_id", "value", "bound", "ratio", "pass", "tolerance", "kind",
               "informational", "params"]


def reports_to_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        d = r.to_dict()
        writer.writerow([
            d["claim_id"], d["value"], d["bound"], d["ratio"], d["pass"], d["tolerance"],
            d["kind"], d["informational"], json.dumps(d["params"], sort_keys=True),
        ])
    return buf.getvalue()


def rows_to_csv(rows: Sequence[dict]) -> str:
    """Flat CSV for a list of homogeneous dict rows (header from the first row)."""
    buf = io.StringIO()
    if not rows:
        return ""
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\r\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _jsonable(v) for k, v in row.items()})
    return buf.getvalue()
