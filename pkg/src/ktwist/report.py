"""Machine-readable run reports."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

__all__ = ["Report", "stringify_ints"]


def stringify_ints(obj: Any) -> Any:
    """Recursively turn ints into decimal strings (bools are left alone)."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): stringify_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify_ints(v) for v in obj]
    return obj


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    results: Any
    agree: bool | None = None
    elapsed_ms: int | None = None
    # (header, rows) for --csv output of k-sweeps
    table: tuple[list[str], list[list[Any]]] | None = field(default=None, repr=False, compare=False)

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "agree": self.agree,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(d["command"], d["inputs"], d["results"], d.get("agree"), d.get("elapsed_ms"))

    def to_csv(self) -> str:
        if self.table is None:
            raise ValueError(f"{self.command} report has no tabular form")
        header, rows = self.table
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([str(x) for x in row])
        return buf.getvalue()
