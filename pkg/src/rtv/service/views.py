"""View request resolution, dispatch to the analytics modules, and
canonical response serialization (shared by the HTTP service and the CLI).
"""

from __future__ import annotations

import json
from datetime import date, datetime

from pydantic import BaseModel

from ..coauthors import build_cooccurrence, graph_payload, top_n_subgraph
from ..corpus import Corpus, Granularity, TimeRange, slice_records
from ..river import field_series, river_payload, stream_layout
from ..venues import build_stacks, rank_venues, stacks_payload
from ..words import RaceMode, StopwordSet, bucket_word_counts, race_frames
from .schemas import Envelope, GraphData, RiverData, VenuesData, WordsData

VIEW_NAMES = ("themeriver", "coauthors", "venues", "words")

DEFAULT_N = {"coauthors": 20, "venues": 5, "words": 10, "themeriver": 1}


class ParamError(Exception):
    """Invalid request parameter; maps to HTTP 400 with a machine-readable code."""

    def __init__(self, code: str, message: str):
        self.code = code
        self.message = message
        super().__init__(f"{code}: {message}")


class ViewRequest(BaseModel):
    """A fully resolved view request: defaults applied, all fields concrete."""

    model_config = {"frozen": True}

    view: str
    start: date
    end: date
    granularity: Granularity
    n_or_k: int
    mode: RaceMode

    @classmethod
    def resolve(
        cls,
        view: str,
        corpus: Corpus,
        *,
        from_=None,
        to=None,
        granularity=None,
        n=None,
        mode=None,
    ) -> "ViewRequest":
        """Apply per-view defaults and validate raw (string) query parameters."""
        if view not in VIEW_NAMES:
            raise ParamError("unknown_view", f"view must be one of {list(VIEW_NAMES)}, got {view!r}")

        full = corpus.full_range()
        start = _parse_query_date(from_, "from") if from_ is not None else full.start
        end = _parse_query_date(to, "to") if to is not None else full.end
        if start > end:
            raise ParamError("invalid_range", f"from {start} is after to {end}")

        if granularity is None:
            gran = Granularity.YEAR
        else:
            try:
                gran = Granularity.parse(str(granularity))
            except ValueError as exc:
                raise ParamError("invalid_granularity", str(exc)) from None

        n_or_k = DEFAULT_N[view]
        if n is not None:
            code = "invalid_k" if view == "words" else "invalid_n"
            try:
                n_or_k = int(str(n))
            except ValueError:
                raise ParamError(code, f"not an integer: {n!r}") from None
            if n_or_k < 1:
                raise ParamError(code, f"must be >= 1, got {n_or_k}")

        if mode is None:
            race_mode = RaceMode.CUMULATIVE
        else:
            try:
                race_mode = RaceMode.parse(str(mode))
            except ValueError as exc:
                raise ParamError("invalid_mode", str(exc)) from None

        if view == "themeriver":
            n_or_k = DEFAULT_N[view]  # unused by this view; pin for cache keying
        if view != "words":
            race_mode = RaceMode.CUMULATIVE

        return cls(view=view, start=start, end=end, granularity=gran, n_or_k=n_or_k, mode=race_mode)

    def cache_key(self, corpus_fingerprint: str) -> str:
        return "|".join(
            (
                self.view,
                self.start.isoformat(),
                self.end.isoformat(),
                self.granularity.value,
                str(self.n_or_k),
                self.mode.value,
                corpus_fingerprint,
            )
        )

    def params_echo(self) -> dict:
        echo = {"from": self.start.isoformat(), "to": self.end.isoformat()}
        if self.view in ("themeriver", "words"):
            echo["granularity"] = self.granularity.value
        if self.view in ("coauthors", "venues"):
            echo["n"] = self.n_or_k
        if self.view == "words":
            echo["k"] = self.n_or_k
            echo["mode"] = self.mode.value
        return echo


def _parse_query_date(raw, name: str) -> date:
    try:
        return datetime.strptime(str(raw), "%Y-%m-%d").date()
    except ValueError:
        raise ParamError("invalid_date", f"{name} must be YYYY-MM-DD, got {raw!r}") from None


def compute_view(corpus: Corpus, stopwords: StopwordSet, req: ViewRequest) -> Envelope:
    """Slice the corpus, run the owning analytics module, wrap in the envelope."""
    sliced = slice_records(corpus.records, TimeRange(req.start, req.end))

    if req.view == "themeriver":
        fs = field_series(sliced, req.granularity)
        data = RiverData.model_validate(river_payload(fs, stream_layout(fs)))
    elif req.view == "coauthors":
        data = GraphData.model_validate(graph_payload(top_n_subgraph(build_cooccurrence(sliced), req.n_or_k)))
    elif req.view == "venues":
        ranked = rank_venues(sliced, req.n_or_k)
        data = VenuesData.model_validate(stacks_payload(build_stacks(sliced, [v for v, _ in ranked])))
    else:  # words
        counts = bucket_word_counts(sliced, req.granularity, stopwords)
        series = race_frames(counts, req.n_or_k, req.mode)
        data = WordsData.model_validate(
            {
                "mode": series.mode.value,
                "k": series.k,
                "frames": [
                    {"bucket": f.bucket, "entries": [{"word": w, "count": c} for w, c in f.entries]}
                    for f in series.frames
                ],
            }
        )

    return Envelope(
        view=req.view,
        params_echo=req.params_echo(),
        paper_count=len(sliced),
        data=data,
    )


def envelope_bytes(envelope: Envelope) -> bytes:
    return canonical_json(envelope.model_dump(mode="json"))


def canonical_json(payload) -> bytes:
    """Deterministic JSON bytes: sorted keys, no whitespace, UTF-8."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")
