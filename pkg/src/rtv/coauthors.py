"""Co-authorship co-occurrence graph and top-n author subgraph extraction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .corpus import PaperRecord


class InvalidN(ValueError):
    """Selection size n must be >= 1."""


@dataclass(frozen=True)
class NodeMetrics:
    collaborator_count: int  # distinct co-authors
    weighted_degree: int  # sum of incident edge weights


@dataclass(frozen=True)
class CoGraph:
    nodes: dict[str, NodeMetrics]
    edges: dict[tuple[str, str], int]  # key is the sorted author pair


def pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def build_cooccurrence(records: list[PaperRecord]) -> CoGraph:
    """Full co-occurrence graph: one edge weight unit per joint paper.

    Every unordered pair of distinct co-authors on a paper gains +1; an
    author appearing only on single-author papers becomes an isolated node
    with zero metrics.
    """
    authors: set[str] = set()
    edges: dict[tuple[str, str], int] = {}
    for rec in records:
        # corpus guarantees deduplicated author lists; dedupe again so a
        # dirty list can never inflate a pair beyond +1 per paper
        names = list(dict.fromkeys(rec.authors))
        authors.update(names)
        for a, b in combinations(names, 2):
            key = pair_key(a, b)
            edges[key] = edges.get(key, 0) + 1

    incident: dict[str, list[int]] = {name: [] for name in authors}
    for (a, b), weight in edges.items():
        incident[a].append(weight)
        incident[b].append(weight)

    nodes = {
        name: NodeMetrics(collaborator_count=len(weights), weighted_degree=sum(weights))
        for name, weights in incident.items()
    }
    return CoGraph(nodes=nodes, edges=edges)


def ranked_authors(graph: CoGraph) -> list[str]:
    """Authors by (collaborator_count desc, weighted_degree desc, name asc)."""
    return sorted(
        graph.nodes,
        key=lambda name: (
            -graph.nodes[name].collaborator_count,
            -graph.nodes[name].weighted_degree,
            name,
        ),
    )


def top_n_subgraph(graph: CoGraph, n: int) -> CoGraph:
    """Induced subgraph on the top-n ranked authors.

    Node metrics stay global (they describe collaboration over the whole
    slice); only edges internal to the selected set are kept, so a selected
    node's metrics may exceed what its subgraph edges alone would imply.
    """
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    selected = set(ranked_authors(graph)[:n])
    nodes = {name: graph.nodes[name] for name in selected}
    edges = {pair: w for pair, w in graph.edges.items() if pair[0] in selected and pair[1] in selected}
    return CoGraph(nodes=nodes, edges=edges)


def graph_payload(graph: CoGraph) -> dict:
    """Wire shape: ranked node list plus source/target/weight edge list."""
    return {
        "nodes": [
            {
                "name": name,
                "collaborator_count": graph.nodes[name].collaborator_count,
                "weighted_degree": graph.nodes[name].weighted_degree,
            }
            for name in ranked_authors(graph)
        ],
        "edges": [
            {"source": a, "target": b, "weight": graph.edges[(a, b)]}
            for a, b in sorted(graph.edges)
        ],
    }
