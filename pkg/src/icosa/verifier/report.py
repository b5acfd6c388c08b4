"""Report assembly and rendering (JSON and markdown)."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .. import __version__
from ..errors import UnknownFormat
from .claims import REGISTRY, evaluate, list_claims


@dataclass
class Report:
    results: list
    tool_version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))

    @property
    def summary(self):
        counts = {"pass": 0, "fail": 0, "error": 0}
        for r in self.results:
            counts[r["status"]] += 1
        return counts

    @property
    def exit_code(self):
        s = self.summary
        if s["error"]:
            return 2
        if s["fail"]:
            return 1
        return 0


def _evaluate_id(claim_id):
    return evaluate(REGISTRY[claim_id])


def run(prefix=None, jobs=1):
    """Execute matching claims; the result order is by claim id for any ``jobs``."""
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    ids = [c.id for c in list_claims(prefix)]
    if jobs == 1 or len(ids) <= 1:
        results = [_evaluate_id(i) for i in ids]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate_id, ids))
    return Report(sorted(results, key=lambda r: r["id"]))


def to_dict(report):
    return {
        "version": report.tool_version,
        "timestamp": report.timestamp,
        "results": report.results,
        "summary": report.summary,
    }


def _cell(value):
    text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
    return text.replace("|", "\\|").replace("\n", " ")


def render(report, fmt="json"):
    if fmt == "json":
        return json.dumps(to_dict(report), indent=2, sort_keys=True) + "\n"
    if fmt in ("md", "markdown"):
        s = report.summary
        lines = [
            f"# icosa-verify {report.tool_version}",
            "",
            f"pass {s['pass']}, fail {s['fail']}, error {s['error']}",
            "",
            "| id | status | anchor | expected | computed | ms |",
            "|---|---|---|---|---|---|",
        ]
        for r in report.results:
            lines.append(
                "| "
                + " | ".join(
                    _cell(x)
                    for x in (r["id"], r["status"], r["paper_anchor"], r["expected"], r["computed"], str(r["runtime_ms"]))
                )
                + " |"
            )
        return "\n".join(lines) + "\n"
    raise UnknownFormat(f"unknown report format {fmt!r}")
