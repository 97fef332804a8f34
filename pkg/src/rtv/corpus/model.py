"""Canonical data model for scholarly paper collections.

Every analytics module consumes the types defined here. A corpus is
immutable once ingested; all downstream operations are pure reads.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from datetime import date
from enum import Enum


class EmptyAuthor(ValueError):
    """Author name is empty after normalization."""


class RowError(ValueError):
    """A single input row failed validation and must be rejected."""


def normalize_author(raw: str) -> str:
    """Trim and collapse internal whitespace runs; case is preserved."""
    name = " ".join(raw.split())
    if not name:
        raise EmptyAuthor(f"author name empty after normalization: {raw!r}")
    return name


class Granularity(str, Enum):
    YEAR = "year"
    MONTH = "month"

    @classmethod
    def parse(cls, text: str) -> "Granularity":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"granularity must be one of {[g.value for g in cls]}, got {text!r}") from None


def bucket_of(d: date, g: Granularity) -> str:
    """Bucket id for a date: "YYYY" or "YYYY-MM" (lexicographic order == chronological)."""
    if g is Granularity.YEAR:
        return f"{d.year:04d}"
    return f"{d.year:04d}-{d.month:02d}"


def bucket_span(first: str, last: str, g: Granularity) -> list[str]:
    """All bucket ids from `first` to `last` inclusive, chronological, no gaps."""
    if first > last:
        raise ValueError(f"bucket span inverted: {first!r} > {last!r}")
    if g is Granularity.YEAR:
        return [f"{y:04d}" for y in range(int(first), int(last) + 1)]
    y, m = int(first[:4]), int(first[5:7])
    last_y, last_m = int(last[:4]), int(last[5:7])
    out = []
    while (y, m) <= (last_y, last_m):
        out.append(f"{y:04d}-{m:02d}")
        y, m = (y + 1, 1) if m == 12 else (y, m + 1)
    return out


def parse_date(text: str) -> date:
    """Parse "YYYY-MM-DD", "YYYY-MM" or "YYYY"; missing parts default to the first."""
    parts = text.strip().split("-")
    if not 1 <= len(parts) <= 3 or not all(p.isdigit() for p in parts):
        raise ValueError(f"unparseable date: {text!r}")
    year = int(parts[0])
    month = int(parts[1]) if len(parts) > 1 else 1
    day = int(parts[2]) if len(parts) > 2 else 1
    if len(parts[0]) != 4:
        raise ValueError(f"year must be four digits: {text!r}")
    return date(year, month, day)  # raises ValueError for impossible dates


@dataclass(frozen=True)
class TimeRange:
    """Inclusive date range; `start <= end` always holds."""

    start: date
    end: date

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError(f"range start {self.start} is after end {self.end}")

    def contains(self, d: date) -> bool:
        return self.start <= d <= self.end

    def intersect(self, other: "TimeRange") -> "TimeRange | None":
        lo, hi = max(self.start, other.start), min(self.end, other.end)
        return TimeRange(lo, hi) if lo <= hi else None


@dataclass(frozen=True)
class PaperRecord:
    id: str
    title: str
    authors: tuple[str, ...]
    abstract: str
    pub_date: date
    citation_count: int
    venue: str
    fields_of_study: tuple[str, ...]


@dataclass(frozen=True)
class IngestIssue:
    row_or_path: str
    severity: str  # "warning" | "rejected"
    reason: str


UNKNOWN_VENUE = "Unknown"


def build_record(
    *,
    title: str,
    raw_authors: list[str],
    abstract: str,
    pub_date: date,
    citation_count: int | str,
    venue: str,
    fields: list[str],
) -> tuple[PaperRecord, list[str]]:
    """Validate and normalize one row into a PaperRecord (id assigned later).

    Returns the record plus warning messages. Raises RowError when the row
    must be rejected.
    """
    warnings: list[str] = []

    title = title.strip()
    if not title:
        raise RowError("title is empty")

    authors: list[str] = []
    for raw in raw_authors:
        if not raw.strip():
            continue
        name = normalize_author(raw)
        if name in authors:
            warnings.append(f"duplicate author {name!r} dropped")
        else:
            authors.append(name)
    if not authors:
        raise RowError("no valid authors")

    if isinstance(citation_count, str):
        text = citation_count.strip()
        try:
            citation_count = int(text)
        except ValueError:
            raise RowError(f"citation count is not an integer: {text!r}") from None
    if citation_count < 0:
        raise RowError(f"citation count is negative: {citation_count}")

    venue = venue.strip() or UNKNOWN_VENUE
    field_labels = tuple(f.strip() for f in fields if f.strip())

    record = PaperRecord(
        id="",
        title=title,
        authors=tuple(authors),
        abstract=abstract,
        pub_date=pub_date,
        citation_count=citation_count,
        venue=venue,
        fields_of_study=field_labels,
    )
    return record, warnings


def content_key(record: PaperRecord) -> str:
    parts = (
        record.title,
        ";".join(record.authors),
        record.pub_date.isoformat(),
        str(record.citation_count),
        record.venue,
        record.abstract,
        ";".join(record.fields_of_study),
    )
    return "\x1f".join(parts)


def assign_ids(records: list[PaperRecord]) -> list[PaperRecord]:
    """Give every record a stable content-derived id, unique within the list.

    Ids depend only on record content and input order, so re-parsing the
    same corpus (from any supported format) reproduces them exactly.
    """
    seen: dict[str, int] = {}
    out = []
    for rec in records:
        digest = hashlib.sha1(content_key(rec).encode("utf-8")).hexdigest()[:12]
        n = seen.get(digest, 0) + 1
        seen[digest] = n
        out.append(replace(rec, id=digest if n == 1 else f"{digest}-{n}"))
    return out


def slice_records(records: list[PaperRecord] | tuple[PaperRecord, ...], trange: TimeRange | None) -> list[PaperRecord]:
    """Records with pub_date inside the inclusive range, original order kept."""
    if trange is None:
        return []
    return [r for r in records if trange.contains(r.pub_date)]


@dataclass(frozen=True)
class Corpus:
    records: tuple[PaperRecord, ...]
    source_label: str = ""
    ingest_report: tuple[IngestIssue, ...] = ()

    def __post_init__(self) -> None:
        ids = [r.id for r in self.records]
        if len(set(ids)) != len(ids):
            raise ValueError("corpus record ids are not unique")

    def slice(self, trange: TimeRange) -> list[PaperRecord]:
        return slice_records(self.records, trange)

    @property
    def date_min(self) -> date | None:
        return min((r.pub_date for r in self.records), default=None)

    @property
    def date_max(self) -> date | None:
        return max((r.pub_date for r in self.records), default=None)

    def full_range(self) -> TimeRange:
        """Corpus min/max range; a universal range when the corpus is empty."""
        if not self.records:
            return TimeRange(date.min, date.max)
        return TimeRange(self.date_min, self.date_max)

    def fingerprint(self) -> str:
        """Content hash over all records, independent of the source format."""
        h = hashlib.sha256()
        for rec in self.records:
            h.update(content_key(rec).encode("utf-8"))
            h.update(b"\x1e")
        return h.hexdigest()
