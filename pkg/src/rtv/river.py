"""Per-field paper counts over time and the symmetric stream layout.

The layout uses the silhouette baseline g0(t) = -1/2 * total(t), which
makes the stacked bands symmetric about zero. Bands are stacked largest
total first (bottom) and tile contiguously up to the top envelope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Granularity, PaperRecord, bucket_of, bucket_span

UNSPECIFIED_FIELD = "Unspecified"


@dataclass(frozen=True)
class FieldSeries:
    buckets: tuple[str, ...]  # chronological, contiguous
    series: dict[str, list[int]]  # field -> counts aligned to buckets


@dataclass(frozen=True)
class StreamLayout:
    buckets: tuple[str, ...]
    order: tuple[str, ...]  # stacking order, bottom to top
    baseline: list[float]  # g0 per bucket
    bands: dict[str, list[tuple[float, float]]]  # field -> (lower, upper) per bucket


def field_series(records: list[PaperRecord], g: Granularity) -> FieldSeries:
    """Paper counts per field per bucket; multi-field papers count once per field.

    Papers listing no field count under "Unspecified". Buckets run from the
    first to the last observed bucket with no gaps.
    """
    if not records:
        return FieldSeries(buckets=(), series={})
    observed = [bucket_of(r.pub_date, g) for r in records]
    buckets = bucket_span(min(observed), max(observed), g)
    index = {b: i for i, b in enumerate(buckets)}

    series: dict[str, list[int]] = {}
    for rec, bucket in zip(records, observed):
        fields = rec.fields_of_study or (UNSPECIFIED_FIELD,)
        for field in fields:
            counts = series.setdefault(field, [0] * len(buckets))
            counts[index[bucket]] += 1
    return FieldSeries(buckets=tuple(buckets), series={f: series[f] for f in sorted(series)})


def stream_layout(fs: FieldSeries) -> StreamLayout:
    """Vertical offsets for every band, symmetric about the zero axis."""
    order = sorted(fs.series, key=lambda f: (-sum(fs.series[f]), f))
    totals = [sum(fs.series[f][t] for f in fs.series) for t in range(len(fs.buckets))]
    baseline = [-0.5 * total + 0.0 for total in totals]  # +0.0 avoids -0.0

    bands: dict[str, list[tuple[float, float]]] = {f: [] for f in order}
    for t in range(len(fs.buckets)):
        lower = baseline[t]
        for field in order:
            upper = lower + fs.series[field][t]
            bands[field].append((lower, upper))
            lower = upper
    return StreamLayout(buckets=fs.buckets, order=tuple(order), baseline=baseline, bands=bands)


def river_payload(fs: FieldSeries, layout: StreamLayout) -> dict:
    """Wire shape; counts are included so clients can re-derive the layout."""
    return {
        "buckets": list(fs.buckets),
        "order": list(layout.order),
        "baseline": layout.baseline,
        "bands": {f: [[lo, hi] for lo, hi in spans] for f, spans in layout.bands.items()},
        "counts": {f: list(counts) for f, counts in fs.series.items()},
    }
