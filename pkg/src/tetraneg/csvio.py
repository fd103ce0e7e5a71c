"""Deterministic CSV emission for scan records.

Fixed column order, numbers at 12 significant digits, LF line endings;
re-emitting a parsed file reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import io
from typing import Iterable

from .scan import OBSERVABLES, ScanRecord

CSV_COLUMNS = ("J1_over_J", "h_over_J", "kT_over_J", "phase_label", "degenerate") + OBSERVABLES


def format_number(x: float) -> str:
    """Shortest %.12g rendering; idempotent under parse/re-format."""
    text = "%.12g" % float(x)
    return "0" if text == "-0" else text


def record_row(record: ScanRecord) -> list[str]:
    # distinct sigma_T states can share a printed |sTz,s1,s2> label; dedupe
    texts = list(dict.fromkeys(lab.text() for lab in record.labels))
    return [
        format_number(record.j1_over_j),
        format_number(record.h_over_j),
        format_number(record.kt_over_j),
        ";".join(texts),
        "true" if record.degenerate else "false",
        *(format_number(v) for v in record.values),
    ]


def write_scan_csv(records: Iterable[ScanRecord], fh, include_values: bool = True) -> int:
    """Write records (or just the header when include_values is false); returns row count."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    count = 0
    if include_values:
        for rec in records:
            writer.writerow(record_row(rec))
            count += 1
    return count


def scan_csv_text(records: Iterable[ScanRecord], include_values: bool = True) -> str:
    buf = io.StringIO()
    write_scan_csv(records, buf, include_values)
    return buf.getvalue()


def read_csv_rows(fh) -> tuple[list[str], list[list[str]]]:
    reader = csv.reader(fh)
    header = next(reader)
    return header, list(reader)


def reemit_csv(header: list[str], rows: list[list[str]]) -> str:
    """Round-trip helper: format every numeric field again and rebuild the file."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    numeric = {i for i, name in enumerate(header) if name not in ("phase_label", "degenerate")}
    for row in rows:
        writer.writerow(
            [format_number(float(v)) if i in numeric else v for i, v in enumerate(row)]
        )
    return buf.getvalue()
