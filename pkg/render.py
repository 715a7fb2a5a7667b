"""
Output rendering for the vvgamma CLI.

Commands produce lists of flat row dictionaries (tables) or report objects
(verification). This module turns either into plain text, JSON or CSV on a
text stream. Nothing here adds timestamps, so identical runs produce
identical output.
"""

import csv
import json
import logging
from enum import Enum
from typing import Any, Dict, Iterable, List, Sequence, TextIO

logger = logging.getLogger(__name__)

BANNER = "=" * 60


class OutputFormat(Enum):
    PLAIN = "plain"
    JSON = "json"
    CSV = "csv"


def _columns(rows: Sequence[Dict[str, Any]]) -> List[str]:
    seen: List[str] = []
    for row in rows:
        for key in row:
            if key not in seen:
                seen.append(key)
    return seen


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_json(payload: Any, stream: TextIO):
    json.dump(payload, stream, indent=2, sort_keys=True)
    stream.write("\n")


def write_csv(rows: Sequence[Dict[str, Any]], stream: TextIO):
    writer = csv.DictWriter(stream, fieldnames=_columns(rows), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})


def write_table(title: str, rows: Sequence[Dict[str, Any]], stream: TextIO):
    """Left-aligned columns under a banner title."""
    stream.write(f"{BANNER}\n{title}\n{BANNER}\n")
    if not rows:
        stream.write("(no rows)\n")
        return
    columns = _columns(rows)
    cells = [[_cell(row.get(c, "")) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    stream.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for r in cells:
        stream.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def render_rows(title: str, rows: Sequence[Dict[str, Any]], fmt: OutputFormat, stream: TextIO):
    if fmt is OutputFormat.JSON:
        write_json(list(rows), stream)
    elif fmt is OutputFormat.CSV:
        write_csv(rows, stream)
    else:
        write_table(title, rows, stream)


def render_reports(command: str, reports: Iterable, fmt: OutputFormat, stream: TextIO) -> bool:
    """Render CheckReport/OracleReport objects; returns True when all passed."""
    reports = list(reports)
    passed = all(r.passed for r in reports)
    if fmt is OutputFormat.JSON:
        write_json({"command": command, "passed": passed,
                    "reports": [r.to_dict() for r in reports]}, stream)
        return passed
    if fmt is OutputFormat.CSV:
        write_csv([row for r in reports for row in r.rows()], stream)
        return passed

    for report in reports:
        stream.write(f"{BANNER}\n{report.title}: {len(report.cases) - len(report.failures)}"
                     f"/{len(report.cases)} passed\n{BANNER}\n")
        for case in report.failures:
            detail = getattr(case, "detail", "") or (
                f"closed={case.closed_form!r} numeric={case.numeric!r} "
                f"rel_error={case.rel_error:.3e} tol={case.tolerance:.1e}"
            )
            stream.write(f"  ❌ {case.name}: {detail}\n")
        for warning in getattr(report, "warnings", []):
            stream.write(f"  ⚠️  {warning}\n")
    stream.write(f"{'✅ all checks passed' if passed else '❌ verification failed'}\n")
    return passed
