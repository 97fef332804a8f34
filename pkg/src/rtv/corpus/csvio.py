"""Canonical CSV ingestion and serialization.

Format: UTF-8, comma-delimited, RFC-4180 quoting, header row
``title,authors,abstract,date,citations,venue,fields``. The authors and
fields cells hold ";"-separated lists. There is no id column; record ids
are derived from content (see model.assign_ids).
"""

from __future__ import annotations

import csv
import io

from .model import (
    IngestIssue,
    PaperRecord,
    RowError,
    assign_ids,
    build_record,
    parse_date,
)

CSV_HEADER = ("title", "authors", "abstract", "date", "citations", "venue", "fields")


class MissingColumn(ValueError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"required column missing: {column!r}")


class EncodingError(ValueError):
    """Input bytes are not valid UTF-8."""


def parse_corpus_csv(data: bytes) -> tuple[list[PaperRecord], list[IngestIssue]]:
    """Parse canonical CSV bytes into validated records plus an issue report.

    Header names are matched case-insensitively after trimming. Every
    non-validating data row yields exactly one rejected-severity issue and
    is excluded; the rest parse normally.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"input is not UTF-8: {exc}") from None

    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise MissingColumn(CSV_HEADER[0]) from None

    positions = {name.strip().lower(): i for i, name in enumerate(header)}
    for name in CSV_HEADER:
        if name not in positions:
            raise MissingColumn(name)

    records: list[PaperRecord] = []
    issues: list[IngestIssue] = []
    row_num = 0
    for row in reader:
        if not row:
            continue  # blank line, not a data row
        row_num += 1
        locator = f"row {row_num}"
        if len(row) < len(header):
            issues.append(IngestIssue(locator, "rejected", f"expected {len(header)} cells, got {len(row)}"))
            continue
        cell = lambda name: row[positions[name]]
        try:
            pub_date = parse_date(cell("date"))
        except ValueError as exc:
            issues.append(IngestIssue(locator, "rejected", str(exc)))
            continue
        try:
            record, warnings = build_record(
                title=cell("title"),
                raw_authors=cell("authors").split(";"),
                abstract=cell("abstract"),
                pub_date=pub_date,
                citation_count=cell("citations"),
                venue=cell("venue"),
                fields=cell("fields").split(";") if cell("fields").strip() else [],
            )
        except RowError as exc:
            issues.append(IngestIssue(locator, "rejected", str(exc)))
            continue
        records.append(record)
        issues.extend(IngestIssue(locator, "warning", w) for w in warnings)

    return assign_ids(records), issues


def write_corpus_csv(records: list[PaperRecord] | tuple[PaperRecord, ...]) -> bytes:
    """Serialize records to canonical CSV; re-parsing yields identical records."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(
            [
                rec.title,
                ";".join(rec.authors),
                rec.abstract,
                rec.pub_date.isoformat(),
                str(rec.citation_count),
                rec.venue,
                ";".join(rec.fields_of_study),
            ]
        )
    return buf.getvalue().encode("utf-8")
