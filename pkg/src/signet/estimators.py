"""Expected-triangle estimates for random insertion and wedge closure.

The fast paths run in O(N) using a suffix-sum dynamic program over the
degree vector; the exact paths evaluate the pre-approximation double/triple
sums literally and exist as permanent test oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateDegreesError
from .graph import SignedGraph

COMPENSATED_SUM_THRESHOLD = 100_000


@dataclass(frozen=True)
class TriangleEstimates:
    """Expected triangles per inserted edge, graph-averaged."""

    delta_random: float
    delta_random_balanced: float
    delta_triangle: float
    avg_d: float
    avg_d2: float


def suffix_degree_sums(degrees: Sequence[int]) -> np.ndarray:
    """s[i] = sum of degrees after index i; s[n-1] = 0."""
    d = np.asarray(degrees, dtype=np.float64)
    s = np.zeros_like(d)
    if len(d) > 1:
        s[:-1] = np.cumsum(d[::-1])[::-1][1:]
    return s


def _check_degrees(degrees: Sequence[int]) -> np.ndarray:
    d = np.asarray(degrees, dtype=np.float64)
    if d.sum() == 0:
        raise DegenerateDegreesError("all degrees are zero")
    return d


def _weighted_suffix_dot(weights: np.ndarray, s: np.ndarray) -> float:
    # Sums of d_i * s_i can reach ~(2M)^2; compensate for large N.
    if len(weights) > COMPENSATED_SUM_THRESHOLD:
        return math.fsum(float(w) * float(v) for w, v in zip(weights, s))
    return float(np.dot(weights, s))


def delta_random_fast(degrees: Sequence[int], m: int) -> float:
    """Graph-average expected triangles from one random edge insertion, O(N).

    Equals (avg(d^2) - avg(d)) / (avg(d) * M * N * (N-1)) * sum_i d_i s_i
    with s the suffix degree sums.
    """
    d = _check_degrees(degrees)
    n = len(d)
    if n < 2 or m < 1:
        raise DegenerateDegreesError("need N >= 2 and M >= 1")
    avg_d = d.mean()
    avg_d2 = float((d * d).mean())
    s = suffix_degree_sums(d)
    total = _weighted_suffix_dot(d, s)
    return (avg_d2 - avg_d) / (avg_d * m * n * (n - 1)) * total


def delta_random_nested(degrees: Sequence[int], m: int) -> float:
    """Suffix-free nested double sum; must match delta_random_fast exactly."""
    d = _check_degrees(degrees)
    n = len(d)
    avg_d = d.mean()
    avg_d2 = float((d * d).mean())
    total = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            total += d[i] * d[j]
    return (avg_d2 - avg_d) / (avg_d * m * n * (n - 1)) * total


def delta_random_exact(degrees: Sequence[int], m: int) -> float:
    """Literal pre-approximation form, averaged over unordered pairs.

    Delta_ij = (d_i d_j / 2M) * sum_{l not in {i,j}} d_l (d_l - 1) / 2M,
    evaluated with the excluded terms kept. Test oracle only.
    """
    d = np.asarray(degrees, dtype=np.float64)
    n = len(d)
    two_m = 2.0 * m
    full = float(np.sum(d * (d - 1.0)))
    total = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            inner = (full - d[i] * (d[i] - 1.0) - d[j] * (d[j] - 1.0)) / two_m
            total += (d[i] * d[j] / two_m) * inner
    return total / (n * (n - 1) / 2.0)


def delta_random_balanced(delta_random: float, eta: float, alpha: float) -> float:
    """Expected balanced triangles per random insertion.

    Wedge-type decomposition: {+,+} and {-,-} wedges close balanced with a
    positive third edge (probability alpha), mixed wedges with a negative
    one (probability 1 - alpha).
    """
    coeff = (
        alpha * eta * eta
        + (1.0 - alpha) * eta * (1.0 - eta)
        + (1.0 - alpha) * (1.0 - eta) * eta
        + alpha * (1.0 - eta) * (1.0 - eta)
    )
    return coeff * delta_random


def delta_triangle_fast(degrees: Sequence[int], m: int) -> float:
    """Graph-average expected triangles from one wedge closure, O(N).

    The explicitly closed wedge always contributes 1; the remainder counts
    implicit closures with both endpoint degrees discounted by one.
    """
    d = _check_degrees(degrees)
    n = len(d)
    if n < 3 or m < 2:
        raise DegenerateDegreesError("need N >= 3 and M >= 2")
    avg_d = d.mean()
    avg_d2 = float((d * d).mean())
    s = suffix_degree_sums(d)
    idx = np.arange(1, n + 1, dtype=np.float64)
    extra = _weighted_suffix_dot(d - 1.0, s - n + idx)
    return 1.0 + (avg_d2 - avg_d) / (avg_d * m * n * (n - 1)) * extra


def delta_triangle_exact(degrees: Sequence[int], m: int) -> float:
    """Literal pre-approximation wedge-closure form. Test oracle only."""
    d = np.asarray(degrees, dtype=np.float64)
    n = len(d)
    two_m = 2.0 * m
    full = float(np.sum(d * (d - 1.0)))
    total = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            inner = (full - d[i] * (d[i] - 1.0) - d[j] * (d[j] - 1.0)) / two_m
            total += ((d[i] - 1.0) * (d[j] - 1.0) / two_m) * inner
    return 1.0 + total / (n * (n - 1) / 2.0)


def estimate_all(g: SignedGraph, eta: float, alpha: float) -> TriangleEstimates:
    """Bundle the fast estimates for a graph at the given (eta, alpha)."""
    d = g.degrees()
    arr = np.asarray(d, dtype=np.float64)
    dr = delta_random_fast(d, g.m)
    return TriangleEstimates(
        delta_random=dr,
        delta_random_balanced=delta_random_balanced(dr, eta, alpha),
        delta_triangle=delta_triangle_fast(d, g.m),
        avg_d=float(arr.mean()),
        avg_d2=float((arr * arr).mean()),
    )
