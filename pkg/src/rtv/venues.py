"""Venue citation ranking and stacked per-paper boxes with scholar links."""

from __future__ import annotations

from dataclasses import dataclass
from urllib.parse import quote_plus

from .corpus import PaperRecord

SCHOLAR_SEARCH = "https://scholar.google.com/scholar?q="


class InvalidN(ValueError):
    """Selection size n must be >= 1."""


@dataclass(frozen=True)
class PaperBox:
    paper_id: str
    title: str
    year: int
    citations: int
    link: str


@dataclass(frozen=True)
class VenueStack:
    venue: str
    total_citations: int
    boxes: tuple[PaperBox, ...]  # descending citations, ties ascending title


def scholar_url(title: str) -> str:
    """Client-openable Google Scholar search link for a paper title."""
    return SCHOLAR_SEARCH + quote_plus(title)


def rank_venues(records: list[PaperRecord], n: int) -> list[tuple[str, int]]:
    """Top venues by total citations in the slice (ties: ascending venue name)."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    totals: dict[str, int] = {}
    for rec in records:
        totals[rec.venue] = totals.get(rec.venue, 0) + rec.citation_count
    ordered = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))
    return ordered[:n]


def build_stacks(records: list[PaperRecord], venues: list[str]) -> list[VenueStack]:
    """One stack per requested venue, in the given order; other papers ignored."""
    by_venue: dict[str, list[PaperRecord]] = {v: [] for v in venues}
    for rec in records:
        if rec.venue in by_venue:
            by_venue[rec.venue].append(rec)

    stacks = []
    for venue in venues:
        papers = sorted(by_venue[venue], key=lambda r: (-r.citation_count, r.title))
        boxes = tuple(
            PaperBox(
                paper_id=r.id,
                title=r.title,
                year=r.pub_date.year,
                citations=r.citation_count,
                link=scholar_url(r.title),
            )
            for r in papers
        )
        stacks.append(
            VenueStack(venue=venue, total_citations=sum(b.citations for b in boxes), boxes=boxes)
        )
    return stacks


def stacks_payload(stacks: list[VenueStack]) -> dict:
    return {
        "venues": [
            {
                "venue": s.venue,
                "total_citations": s.total_citations,
                "boxes": [
                    {
                        "paper_id": b.paper_id,
                        "title": b.title,
                        "year": b.year,
                        "citations": b.citations,
                        "link": b.link,
                    }
                    for b in s.boxes
                ],
            }
            for s in stacks
        ]
    }
