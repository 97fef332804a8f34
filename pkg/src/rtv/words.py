"""Abstract tokenization, per-bucket word counts, and top-k race frames."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .corpus import Granularity, PaperRecord, bucket_of, bucket_span

# Runs of letters/digits; everything else is a separator. \w minus "_".
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


class InvalidK(ValueError):
    """Race frame size k must be >= 1."""


class RaceMode(str, Enum):
    CUMULATIVE = "cumulative"
    PER_BUCKET = "per_bucket"

    @classmethod
    def parse(cls, text: str) -> "RaceMode":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"mode must be one of {[m.value for m in cls]}, got {text!r}") from None


@dataclass(frozen=True)
class StopwordSet:
    """Lowercase tokens to drop; membership is exact-match."""

    words: frozenset[str]
    source_path: str = ""

    def __contains__(self, token: str) -> bool:
        return token in self.words

    @classmethod
    def empty(cls) -> "StopwordSet":
        return cls(frozenset())

    @classmethod
    def from_file(cls, path) -> "StopwordSet":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        words = frozenset(w.strip().lower() for w in lines if w.strip())
        return cls(words, source_path=str(path))

    @classmethod
    def default(cls) -> "StopwordSet":
        text = resources.files("rtv").joinpath("data/stopwords_en.txt").read_text(encoding="utf-8")
        words = frozenset(w.strip().lower() for w in text.splitlines() if w.strip())
        return cls(words, source_path="builtin:stopwords_en.txt")


def tokenize(text: str, stop: StopwordSet) -> list[str]:
    """Lowercased tokens split on non-alphanumerics.

    Drops tokens shorter than 2 characters, pure-digit tokens, and stopwords.
    """
    out = []
    for token in _TOKEN_RE.findall(text.lower()):
        if len(token) < 2 or token.isdigit() or token in stop:
            continue
        out.append(token)
    return out


# BucketId -> word -> count, buckets in chronological order with gaps filled.
BucketWordCounts = dict[str, dict[str, int]]


def bucket_word_counts(
    records: list[PaperRecord], g: Granularity, stop: StopwordSet
) -> BucketWordCounts:
    """Token counts per time bucket across all abstracts in that bucket.

    Buckets with no papers between the first and last observed bucket are
    still emitted (empty) so animation time steps stay uniform.
    """
    per_bucket: dict[str, Counter] = {}
    for rec in records:
        counter = per_bucket.setdefault(bucket_of(rec.pub_date, g), Counter())
        counter.update(tokenize(rec.abstract, stop))
    if not per_bucket:
        return {}
    buckets = bucket_span(min(per_bucket), max(per_bucket), g)
    return {b: dict(sorted(per_bucket.get(b, Counter()).items())) for b in buckets}


@dataclass(frozen=True)
class RaceFrame:
    bucket: str
    entries: tuple[tuple[str, int], ...]  # descending count, ties ascending word


@dataclass(frozen=True)
class RaceSeries:
    mode: RaceMode
    k: int
    frames: tuple[RaceFrame, ...]


def race_frames(counts: BucketWordCounts, k: int, mode: RaceMode) -> RaceSeries:
    """Top-k words per bucket, cumulative over prior buckets or per bucket alone."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    frames = []
    running: Counter = Counter()
    for bucket, words in counts.items():
        if mode is RaceMode.CUMULATIVE:
            running.update(words)
            pool = running
        else:
            pool = words
        top = sorted(pool.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
        frames.append(RaceFrame(bucket=bucket, entries=tuple(top)))
    return RaceSeries(mode=mode, k=k, frames=tuple(frames))
