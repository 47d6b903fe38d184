import itertools
import random

import pytest

from signet.graph import Sign, SignedGraph, build_graph


def brute_force_census(g: SignedGraph) -> dict[str, int]:
    """O(N^3) triple-loop triangle census, the independent oracle."""
    counts = {"+++": 0, "++-": 0, "+--": 0, "---": 0}
    keys = ["---", "+--", "++-", "+++"]
    for a, b, c in itertools.combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            pos = sum(
                1
                for s in (g.sign(a, b), g.sign(b, c), g.sign(a, c))
                if s is Sign.POSITIVE
            )
            counts[keys[pos]] += 1
    return counts


def random_signed_graph(n: int, p: float, seed: int, eta: float = 0.5) -> SignedGraph:
    """Erdos-Renyi topology with i.i.d. signs."""
    rng = random.Random(seed)
    triples = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                s = Sign.POSITIVE if rng.random() < eta else Sign.NEGATIVE
                triples.append((u, v, s))
    return build_graph(triples, n=n)


def power_law_signed_graph(
    n: int, m: int, seed: int, eta: float = 0.9, gamma: float = 2.5
) -> SignedGraph:
    """Chung-Lu style graph from a power-law weight sequence, i.i.d. signs.

    Used as a desk-scale stand-in for trust-network inputs.
    """
    rng = random.Random(seed)
    weights = [(i + 1) ** (-1.0 / (gamma - 1.0)) for i in range(n)]
    total = sum(weights)
    cum = []
    acc = 0.0
    for w in weights:
        acc += w / total
        cum.append(acc)

    def draw() -> int:
        x = rng.random()
        lo, hi = 0, n - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if cum[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        return lo

    edges: dict[tuple[int, int], Sign] = {}
    budget = 200 * m
    while len(edges) < m and budget > 0:
        budget -= 1
        u, v = draw(), draw()
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges:
            continue
        edges[key] = Sign.POSITIVE if rng.random() < eta else Sign.NEGATIVE
    triples = [(u, v, s) for (u, v), s in edges.items()]
    return build_graph(triples, n=n)


@pytest.fixture
def k3_mixed() -> SignedGraph:
    """Triangle with signs (+, +, -)."""
    return build_graph(
        [(0, 1, Sign.POSITIVE), (1, 2, Sign.POSITIVE), (0, 2, Sign.NEGATIVE)]
    )


@pytest.fixture
def k3_positive() -> SignedGraph:
    return build_graph(
        [(0, 1, Sign.POSITIVE), (1, 2, Sign.POSITIVE), (0, 2, Sign.POSITIVE)]
    )


@pytest.fixture
def path3() -> SignedGraph:
    """Path 0-1-2, both edges positive."""
    return build_graph([(0, 1, Sign.POSITIVE), (1, 2, Sign.POSITIVE)])
