"""Pydantic models for HTTP request parameters and response bodies."""

from __future__ import annotations

from datetime import date

from pydantic import BaseModel


class GraphNode(BaseModel):
    name: str
    collaborator_count: int
    weighted_degree: int


class GraphEdge(BaseModel):
    source: str
    target: str
    weight: int


class GraphData(BaseModel):
    nodes: list[GraphNode]
    edges: list[GraphEdge]


class BoxModel(BaseModel):
    paper_id: str
    title: str
    year: int
    citations: int
    link: str


class VenueStackModel(BaseModel):
    venue: str
    total_citations: int
    boxes: list[BoxModel]


class VenuesData(BaseModel):
    venues: list[VenueStackModel]


class RiverData(BaseModel):
    buckets: list[str]
    order: list[str]
    baseline: list[float]
    bands: dict[str, list[tuple[float, float]]]
    counts: dict[str, list[int]]


class RaceEntryModel(BaseModel):
    word: str
    count: int


class RaceFrameModel(BaseModel):
    bucket: str
    entries: list[RaceEntryModel]


class WordsData(BaseModel):
    mode: str
    k: int
    frames: list[RaceFrameModel]


class Envelope(BaseModel):
    view: str
    params_echo: dict[str, str | int]
    paper_count: int
    data: GraphData | VenuesData | RiverData | WordsData


class CorpusStats(BaseModel):
    paper_count: int
    date_min: date | None
    date_max: date | None
    venue_count: int
    field_count: int
    author_count: int


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorEnvelope(BaseModel):
    error: ErrorBody
