"""Corpus ingestion, validation, and slicing."""

from .csvio import CSV_HEADER, EncodingError, MissingColumn, parse_corpus_csv, write_corpus_csv
from .model import (
    Corpus,
    EmptyAuthor,
    Granularity,
    IngestIssue,
    PaperRecord,
    TimeRange,
    UNKNOWN_VENUE,
    bucket_of,
    bucket_span,
    normalize_author,
    parse_date,
    slice_records,
)
from .s2 import FormatError, parse_semantic_scholar

__all__ = [
    "CSV_HEADER",
    "Corpus",
    "EmptyAuthor",
    "EncodingError",
    "FormatError",
    "Granularity",
    "IngestIssue",
    "MissingColumn",
    "PaperRecord",
    "TimeRange",
    "UNKNOWN_VENUE",
    "bucket_of",
    "bucket_span",
    "normalize_author",
    "parse_corpus_csv",
    "parse_date",
    "parse_semantic_scholar",
    "slice_records",
    "write_corpus_csv",
]


def load_corpus(path, fmt: str) -> Corpus:
    """Read a corpus file in the given format ("csv" or "s2")."""
    from pathlib import Path

    data = Path(path).read_bytes()
    if fmt == "csv":
        records, issues = parse_corpus_csv(data)
    elif fmt == "s2":
        records, issues = parse_semantic_scholar(data)
    else:
        raise ValueError(f"unknown corpus format: {fmt!r}")
    return Corpus(records=tuple(records), source_label=str(path), ingest_report=tuple(issues))
