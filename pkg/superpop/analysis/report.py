"""Writers for the ratio table (TSV), plot data (CSV) and JSON reports."""
from __future__ import annotations

import csv
import io
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, TextIO, Union

from superpop.analysis.periodstats import (
    LowPeriodicityCheck,
    PeriodHistogram,
    PlotPoint,
    RatioRow,
)
from superpop.configuration.models import SCHEMA_VERSION

TABLE_COLUMNS = ("period", "nbseq", "cum_nbseq", "alpha", "naive_bound", "large_term", "small_term", "beta")
PLOT_COLUMNS = ("period", "count", "cum_sp", "v_line", "h_line")

Target = Union[str, Path, TextIO]


def _emit(text: str, target: Target) -> None:
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
    else:
        target.write(text)


def format_float(x: float) -> str:
    """Six significant digits."""
    return f"{x:.6g}"


def format_row(row: RatioRow) -> str:
    cells = [str(row.period), str(row.nbseq), str(row.cum_nbseq)]
    cells += [format_float(getattr(row, col)) for col in TABLE_COLUMNS[3:]]
    return "\t".join(cells)


def write_ratio_table(rows: Sequence[RatioRow], target: Target) -> None:
    lines = ["\t".join(TABLE_COLUMNS)] + [format_row(r) for r in rows]
    _emit("\n".join(lines) + "\n", target)


def write_plot_data(points: Iterable[PlotPoint], target: Target) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(PLOT_COLUMNS)
    for p in points:
        writer.writerow([p.period, p.count, repr(p.cum_sp), repr(p.v_line), repr(p.h_line)])
    _emit(buf.getvalue(), target)


def envelope(payload: Dict[str, Any], timestamp: bool = True) -> Dict[str, Any]:
    """Add schema_version and, unless suppressed, a generated_at timestamp."""
    doc = {"schema_version": SCHEMA_VERSION, **payload}
    if timestamp:
        doc["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return doc


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_json(doc: Dict[str, Any], target: Target) -> None:
    _emit(dumps(doc), target)


def analysis_report(h: PeriodHistogram, selected: RatioRow, c: Any, source: str,
                    floor_ok: bool, low_periodicity: Optional[LowPeriodicityCheck] = None,
                    duplicates_counted: bool = True) -> Dict[str, Any]:
    report = {
        "source": source,
        "n": h.n,
        "m": h.m,
        "c": str(c),
        "duplicates_counted": duplicates_counted,
        "histogram": {str(i): k for i, k in sorted(h.counts.items())},
        "selected": selected.to_dict(),
        "small_term_floor_ok": floor_ok,
    }
    if low_periodicity is not None:
        report["low_periodicity"] = low_periodicity.to_dict()
    return report
