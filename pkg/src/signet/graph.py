"""Signed-graph representation and degree-proportional sampling.

Vertices are dense integers in [0, n). Edges are undirected, unweighted and
carry a sign; the adjacency index gives O(1) expected sign lookup and O(d)
neighbor iteration with deterministic order (insertion order of edges).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DuplicateEdgeError, EmptyGraphError, SelfLoopError


class Sign(enum.IntEnum):
    """Edge sign. Product of two signs is POSITIVE iff they are equal."""

    POSITIVE = 1
    NEGATIVE = -1

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"


def canonical_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SignedGraph:
    """Immutable undirected signed graph.

    ``adj[u]`` maps each neighbor of ``u`` to the sign of the connecting
    edge. ``labels``, when present, maps dense vertex ids back to the
    original identifiers seen during ingestion.
    """

    n: int
    edges: tuple[tuple[int, int, Sign], ...]
    adj: tuple[dict[int, Sign], ...]
    labels: Optional[tuple] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def m_positive(self) -> int:
        return sum(1 for _, _, s in self.edges if s is Sign.POSITIVE)

    @property
    def m_negative(self) -> int:
        return self.m - self.m_positive

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sign(self, u: int, v: int) -> Sign:
        return self.adj[u][v]

    def neighbors(self, v: int) -> Sequence[int]:
        return list(self.adj[v].keys())


def build_graph(
    edge_triples: Iterable[tuple[int, int, Sign]],
    n: Optional[int] = None,
    labels: Optional[Sequence] = None,
) -> SignedGraph:
    """Construct a canonicalized SignedGraph from (u, v, sign) triples.

    Rejects self-loops and duplicate undirected pairs. The vertex count is
    1 + max id unless ``n`` overrides it (isolated vertices are retained).
    """
    edges: list[tuple[int, int, Sign]] = []
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for u, v, s in edge_triples:
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex id in edge ({u}, {v})")
        if u == v:
            raise SelfLoopError(u)
        pair = canonical_pair(u, v)
        if pair in seen:
            raise DuplicateEdgeError(*pair)
        seen.add(pair)
        edges.append((pair[0], pair[1], Sign(s)))
        max_id = max(max_id, pair[1])
    count = (max_id + 1) if n is None else n
    if count < max_id + 1:
        raise ValueError(f"n={count} too small for max vertex id {max_id}")
    adj: list[dict[int, Sign]] = [dict() for _ in range(count)]
    for u, v, s in edges:
        adj[u][v] = s
        adj[v][u] = s
    return SignedGraph(
        n=count,
        edges=tuple(edges),
        adj=tuple(adj),
        labels=tuple(labels) if labels is not None else None,
    )


def build_sampling_vector(g: SignedGraph) -> list[int]:
    """Degree-proportional sampling vector: vertex i appears degree(i) times.

    A uniform draw picks vertex i with probability d_i / (2M). Length is
    exactly 2M; isolated vertices never appear.
    """
    if g.m == 0:
        raise EmptyGraphError("cannot build sampling vector of an empty graph")
    pi: list[int] = []
    for u, v, _ in g.edges:
        pi.append(u)
        pi.append(v)
    return pi


def sampling_vector_from_degrees(degrees: Sequence[int]) -> list[int]:
    """Sampling vector built directly from a degree sequence."""
    if sum(degrees) == 0:
        raise EmptyGraphError("all degrees are zero")
    pi: list[int] = []
    for v, d in enumerate(degrees):
        pi.extend([v] * d)
    return pi


def two_hop_walk(
    g: SignedGraph, v_i: int, rng: random.Random
) -> Optional[tuple[int, int]]:
    """Uniform two-hop walk from v_i: neighbor v_k, then neighbor v_j of v_k.

    Returns (v_k, v_j), or None when v_i has no neighbors. Landing back on
    v_i is possible; the caller treats that as a collision.
    """
    nbrs_i = g.adj[v_i]
    if not nbrs_i:
        return None
    keys_i = list(nbrs_i.keys())
    v_k = keys_i[rng.randrange(len(keys_i))]
    keys_k = list(g.adj[v_k].keys())
    v_j = keys_k[rng.randrange(len(keys_k))]
    return v_k, v_j
