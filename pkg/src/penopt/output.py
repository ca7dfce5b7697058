"""Table, CSV and JSON emitters sharing one row model.

A command result is a list of flat rows (dicts with the same keys) plus an
optional summary mapping.  Numbers are printed with a fixed count of
significant digits, and files are written atomically.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

__all__ = ["DEFAULT_DIGITS", "Result", "format_value", "render", "write_text"]

DEFAULT_DIGITS = 12


@dataclass
class Result:
    rows: list[dict[str, Any]]
    summary: dict[str, Any] = field(default_factory=dict)
    title: str = ""


def _plain(value: Any) -> Any:
    if isinstance(value, enum.Enum):
        return value.name.lower()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(_plain(k)): _plain(v) for k, v in value.items()}
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()  # numpy scalar
    return value


def format_value(value: Any, digits: int = DEFAULT_DIGITS) -> str:
    value = _plain(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.{digits}g}"
    if value is None:
        return ""
    if isinstance(value, list):
        return " ".join(format_value(v, digits) for v in value)
    return str(value)


def _round_json(value: Any, digits: int) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return float(f"{value:.{digits}g}")
    if isinstance(value, list):
        return [_round_json(v, digits) for v in value]
    if isinstance(value, dict):
        return {k: _round_json(v, digits) for k, v in value.items()}
    return value


def _columns(rows: list[dict[str, Any]]) -> list[str]:
    cols: list[str] = []
    for row in rows:
        for key in row:
            if key not in cols:
                cols.append(key)
    return cols


def _table(result: Result, digits: int) -> str:
    lines = []
    if result.title:
        lines.append(result.title)
    if result.rows:
        cols = _columns(result.rows)
        cells = [[format_value(r.get(c), digits) for c in cols] for r in result.rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for row in cells:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    if result.summary:
        if result.rows:
            lines.append("")
        width = max(len(k) for k in result.summary)
        for key, value in result.summary.items():
            lines.append(f"{key.ljust(width)}  {format_value(value, digits)}")
    return "\n".join(lines) + "\n"


def _csv(result: Result, digits: int) -> str:
    buf = io.StringIO()
    cols = _columns(result.rows)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in result.rows:
        writer.writerow([format_value(row.get(c), digits) for c in cols])
    return buf.getvalue()


def _json(result: Result, digits: int, metadata: dict[str, Any]) -> str:
    doc = {
        "metadata": _plain(metadata),
        "summary": _round_json(_plain(result.summary), digits),
        "rows": _round_json(_plain(result.rows), digits),
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def render(result: Result, fmt: str, *, digits: int = DEFAULT_DIGITS, metadata: dict[str, Any] | None = None) -> str:
    if fmt == "table":
        return _table(result, digits)
    if fmt == "csv":
        return _csv(result, digits)
    if fmt == "json":
        return _json(result, digits, metadata or {})
    raise ValueError(f"unknown format {fmt!r}")


def write_text(text: str, out: str | os.PathLike | None) -> None:
    """Write to stdout, or atomically to ``out`` through a temp file and rename."""
    if out is None or str(out) == "-":
        sys.stdout.write(text)
        return
    target = Path(out)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
