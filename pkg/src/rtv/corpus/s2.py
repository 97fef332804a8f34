"""Adapter for Semantic Scholar export files (.json array or .jsonl).

Each record carries: title, authors[].name, abstract, publicationDate or
year, citationCount, venue, fieldsOfStudy. Records go through the same
validation as the CSV path, so semantically identical inputs produce
identical PaperRecord lists.
"""

from __future__ import annotations

import json
from datetime import date

from .model import (
    IngestIssue,
    PaperRecord,
    RowError,
    assign_ids,
    build_record,
    parse_date,
)


class FormatError(ValueError):
    """Input is neither a JSON array nor line-delimited JSON objects."""


def _author_names(value) -> list[str]:
    if not isinstance(value, list):
        raise RowError("authors is not a list")
    names = []
    for entry in value:
        if isinstance(entry, dict):
            names.append(str(entry.get("name", "")))
        elif isinstance(entry, str):
            names.append(entry)
        else:
            raise RowError(f"unrecognized author entry: {entry!r}")
    return names


def _decode_objects(data: bytes) -> list[tuple[str, dict | None]]:
    """Yield (locator, object) pairs from array or line-delimited input.

    A None object marks an unparseable line (reported as a rejected row).
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise FormatError("input is not UTF-8 text") from None
    if not text.strip():
        return []  # zero-record stream

    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if isinstance(doc, list):
        return [(f"record {i}", obj) for i, obj in enumerate(doc, start=1)]
    if isinstance(doc, dict):
        return [("record 1", doc)]

    pairs: list[tuple[str, dict | None]] = []
    any_object = False
    for line_num, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            pairs.append((f"line {line_num}", None))
            continue
        if isinstance(obj, dict):
            any_object = True
        pairs.append((f"line {line_num}", obj))
    if not any_object:
        raise FormatError("input is neither a JSON array nor line-delimited JSON objects")
    return pairs


def parse_semantic_scholar(data: bytes) -> tuple[list[PaperRecord], list[IngestIssue]]:
    records: list[PaperRecord] = []
    issues: list[IngestIssue] = []

    for locator, obj in _decode_objects(data):
        if obj is None:
            issues.append(IngestIssue(locator, "rejected", "line is not valid JSON"))
            continue
        if not isinstance(obj, dict):
            issues.append(IngestIssue(locator, "rejected", "entry is not a JSON object"))
            continue

        warnings: list[str] = []
        try:
            pub_date = _pub_date(obj, warnings)
            record, more = build_record(
                title=str(obj.get("title") or ""),
                raw_authors=_author_names(obj.get("authors", [])),
                abstract=str(obj.get("abstract") or ""),
                pub_date=pub_date,
                citation_count=_citation_count(obj),
                venue=str(obj.get("venue") or ""),
                fields=[str(f) for f in obj.get("fieldsOfStudy") or []],
            )
        except RowError as exc:
            issues.append(IngestIssue(locator, "rejected", str(exc)))
            continue
        records.append(record)
        issues.extend(IngestIssue(locator, "warning", w) for w in warnings + more)

    return assign_ids(records), issues


def _pub_date(obj: dict, warnings: list[str]) -> date:
    raw = obj.get("publicationDate")
    if raw:
        try:
            return parse_date(str(raw))
        except ValueError as exc:
            raise RowError(str(exc)) from None
    year = obj.get("year")
    if year is None:
        raise RowError("neither publicationDate nor year present")
    try:
        parsed = date(int(year), 7, 1)
    except (TypeError, ValueError):
        raise RowError(f"invalid year: {year!r}") from None
    warnings.append(f"publicationDate missing; defaulted to {parsed.isoformat()} from year")
    return parsed


def _citation_count(obj: dict) -> int:
    count = obj.get("citationCount")
    if not isinstance(count, int) or isinstance(count, bool):
        raise RowError(f"citation count is not an integer: {count!r}")
    return count
