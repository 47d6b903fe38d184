"""Measured properties of signed networks.

Covers the sign ratio, the full signed triangle census (with per-vertex
triangle counts feeding local clustering), the balanced-triangle fraction
and the degree histogram.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import EmptyGraphError, NoTrianglesError
from .graph import SignedGraph

TRIANGLE_TYPES = ("+++", "++-", "+--", "---")


@dataclass(frozen=True)
class TriangleCensus:
    """Triangle counts keyed by the multiset of edge signs."""

    ppp: int = 0
    ppm: int = 0
    pmm: int = 0
    mmm: int = 0

    @property
    def total(self) -> int:
        return self.ppp + self.ppm + self.pmm + self.mmm

    @property
    def balanced(self) -> int:
        # Even number of negative edges.
        return self.ppp + self.pmm

    def as_counts(self) -> dict[str, int]:
        return dict(zip(TRIANGLE_TYPES, (self.ppp, self.ppm, self.pmm, self.mmm)))

    def distribution(self) -> dict[str, float]:
        """Fractions per type; all zero when the graph has no triangles."""
        t = self.total
        if t == 0:
            return {k: 0.0 for k in TRIANGLE_TYPES}
        return {k: c / t for k, c in self.as_counts().items()}


@dataclass(frozen=True)
class GraphStats:
    eta: float
    delta_b: float
    degrees: tuple[int, ...]
    census: TriangleCensus
    clustering: tuple[float, ...]
    degree_histogram: dict[int, int]
    n: int
    m: int
    m_positive: int


def compute_eta(g: SignedGraph) -> float:
    """Fraction of edges that are positive, M+ / M."""
    if g.m == 0:
        raise EmptyGraphError("eta undefined on an empty graph")
    return g.m_positive / g.m


def triangle_census(g: SignedGraph, per_vertex: list[int] | None = None) -> TriangleCensus:
    """Count each triangle once, classified by its three edge signs.

    Degree-ordered forward listing: vertices are ranked by (degree, id) and
    each triangle is discovered at its lowest-ranked vertex, giving
    O(M * d_max)-class work. When ``per_vertex`` is passed (a zeroed list of
    length n) it is filled with the sign-agnostic triangle count through
    each vertex.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (len(g.adj[v]), v))
    rank = [0] * n
    for r, v in enumerate(order):
        rank[v] = r

    # back[v] holds already-processed neighbors of v (lower rank than the
    # current frontier); intersecting back[s] and back[t] lists triangles.
    back: list[dict[int, int]] = [dict() for _ in range(n)]
    counts = [0, 0, 0, 0]  # indexed by number of negative edges
    for s in order:
        adj_s = g.adj[s]
        rs = rank[s]
        bs = back[s]
        for t, s_st in adj_s.items():
            if rank[t] < rs:
                continue
            bt = back[t]
            small, large = (bs, bt) if len(bs) <= len(bt) else (bt, bs)
            for x in small:
                if x in large:
                    neg = (
                        (s_st < 0) + (g.adj[x][s] < 0) + (g.adj[x][t] < 0)
                    )
                    counts[neg] += 1
                    if per_vertex is not None:
                        per_vertex[x] += 1
                        per_vertex[s] += 1
                        per_vertex[t] += 1
            bt[s] = 1
    return TriangleCensus(ppp=counts[0], ppm=counts[1], pmm=counts[2], mmm=counts[3])


def balanced_fraction(census: TriangleCensus) -> float:
    """Fraction of triangles with an even number of negative edges."""
    if census.total == 0:
        raise NoTrianglesError("balanced fraction undefined without triangles")
    return census.balanced / census.total


def local_clustering(g: SignedGraph) -> list[float]:
    """Per-vertex clustering c_i = 2 T_i / (d_i (d_i - 1)); 0 when d_i < 2."""
    per_vertex = [0] * g.n
    triangle_census(g, per_vertex=per_vertex)
    coeffs = []
    for v in range(g.n):
        d = len(g.adj[v])
        coeffs.append(2.0 * per_vertex[v] / (d * (d - 1)) if d >= 2 else 0.0)
    return coeffs


def stats_report(g: SignedGraph) -> GraphStats:
    """All measured properties in one pass-friendly bundle."""
    per_vertex = [0] * g.n
    census = triangle_census(g, per_vertex=per_vertex)
    degrees = g.degrees()
    clustering = tuple(
        2.0 * per_vertex[v] / (d * (d - 1)) if d >= 2 else 0.0
        for v, d in enumerate(degrees)
    )
    delta_b = census.balanced / census.total if census.total > 0 else 0.0
    return GraphStats(
        eta=compute_eta(g),
        delta_b=delta_b,
        degrees=tuple(degrees),
        census=census,
        clustering=clustering,
        degree_histogram=dict(Counter(degrees)),
        n=g.n,
        m=g.m,
        m_positive=g.m_positive,
    )
