"""Parameter learning: EM for the wedge-closure rate and alternating
closed-form updates for the sign-correction and balance parameters.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import EmptyGraphError, RhoAtOneError
from .estimators import (
    TriangleEstimates,
    delta_random_balanced,
    delta_random_fast,
    delta_triangle_fast,
)
from .graph import SignedGraph
from .metrics import compute_eta, triangle_census

log = logging.getLogger(__name__)

RHO_EPS = 1e-6


@dataclass
class LearnConfig:
    em_sample_size: Optional[int] = None  # defaults to min(M, 5000)
    em_max_iters: int = 50
    em_tol: float = 1e-4
    ab_max_iters: int = 100
    ab_tol: float = 1e-6
    rho_init: float = 0.5
    seed: int = 42

    def sample_size(self, m: int) -> int:
        s = self.em_sample_size if self.em_sample_size is not None else min(m, 5000)
        if s < 1:
            raise ValueError("em_sample_size must be >= 1")
        return min(s, m)


@dataclass
class ModelParams:
    rho: float
    alpha: float
    beta: float
    eta: float
    delta_b: float
    learn_log: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "alpha": self.alpha,
            "beta": self.beta,
            "eta": self.eta,
            "delta_b": self.delta_b,
            "trace": self.learn_log,
            "warnings": self.warnings,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ModelParams":
        return cls(
            rho=data["rho"],
            alpha=data["alpha"],
            beta=data["beta"],
            eta=data["eta"],
            delta_b=data["delta_b"],
            learn_log=data.get("trace", []),
            warnings=data.get("warnings", []),
        )


def em_edge_responsibility(
    g: SignedGraph, v_i: int, v_j: int, rho_t: float
) -> float:
    """Posterior probability that edge (v_i, v_j) came from wedge closure.

    Wedge likelihood walks every neighbor v_k of v_i and accumulates
    1/(d_i d_k) when v_k also neighbors v_j; the random-insertion
    likelihood is the chance of drawing the second endpoint from the
    sampling vector, d_j / 2M.
    """
    d_i = len(g.adj[v_i])
    wedge = 0.0
    adj_j = g.adj[v_j]
    for v_k in g.adj[v_i]:
        if v_k in adj_j:
            wedge += 1.0 / (d_i * len(g.adj[v_k]))
    w = rho_t * wedge
    if w == 0.0:
        return 0.0
    r = (1.0 - rho_t) * (len(adj_j) / (2.0 * g.m))
    return w / (w + r)


def em_learn_rho(g: SignedGraph, cfg: LearnConfig) -> tuple[float, list[dict]]:
    """EM iteration: average responsibilities over a uniform edge sample.

    The conditioning endpoint of each sampled edge is chosen uniformly.
    Returns the final rho (clamped away from {0, 1}) and the trace.
    """
    if g.m == 0:
        raise EmptyGraphError("cannot learn on an empty graph")
    rng = random.Random(cfg.seed)
    s = cfg.sample_size(g.m)
    rho = cfg.rho_init
    trace = []
    for it in range(cfg.em_max_iters):
        sample = rng.sample(range(g.m), s) if s < g.m else range(g.m)
        total = 0.0
        for idx in sample:
            u, v, _ = g.edges[idx]
            if rng.random() < 0.5:
                u, v = v, u
            total += em_edge_responsibility(g, u, v, rho)
        new_rho = total / s
        delta = abs(new_rho - rho)
        trace.append({"iteration": it, "rho": new_rho, "delta": delta})
        rho = new_rho
        if delta < cfg.em_tol:
            break
    return min(max(rho, RHO_EPS), 1.0 - RHO_EPS), trace


def update_beta(
    delta_b: float, est: TriangleEstimates, warnings: Optional[list] = None
) -> float:
    """Closed-form balance parameter given the triangle estimates."""
    raw = (
        delta_b * (est.delta_triangle + est.delta_random)
        - est.delta_random_balanced
    ) / est.delta_triangle
    if not 0.0 <= raw <= 1.0:
        msg = f"beta={raw:.4f} clamped to [0, 1]"
        log.warning(msg)
        if warnings is not None:
            warnings.append(msg)
    return min(max(raw, 0.0), 1.0)


def eta_triangle(eta: float, beta: float) -> float:
    """Probability a wedge-closure edge comes out positive."""
    same = eta * eta + (1.0 - eta) * (1.0 - eta)
    mixed = 2.0 * eta * (1.0 - eta)
    return beta * same + (1.0 - beta) * mixed


def update_alpha(
    eta: float, rho: float, beta: float, warnings: Optional[list] = None
) -> float:
    """Sign-correction probability for random insertions."""
    if rho >= 1.0:
        raise RhoAtOneError("alpha update undefined at rho = 1")
    raw = (eta - rho * eta_triangle(eta, beta)) / (1.0 - rho)
    if not 0.0 <= raw <= 1.0:
        msg = f"alpha={raw:.4f} clamped to [0, 1]"
        log.warning(msg)
        if warnings is not None:
            warnings.append(msg)
    return min(max(raw, 0.0), 1.0)


def learn_parameters(g: SignedGraph, cfg: Optional[LearnConfig] = None) -> ModelParams:
    """Full learning pass: measure the input, EM for rho, then alternate
    the beta and alpha closed-form updates until they stop moving.
    """
    cfg = cfg or LearnConfig()
    warnings: list[str] = []
    eta = compute_eta(g)
    census = triangle_census(g)
    if census.total > 0:
        delta_b = census.balanced / census.total
    else:
        delta_b = 0.0
        msg = "input graph has no triangles; delta_b set to 0"
        log.warning(msg)
        warnings.append(msg)

    rho, em_trace = em_learn_rho(g, cfg)

    degrees = g.degrees()
    dr = delta_random_fast(degrees, g.m)
    dt = delta_triangle_fast(degrees, g.m)

    alpha, beta = eta, delta_b
    ab_trace = []
    for it in range(cfg.ab_max_iters):
        drb = delta_random_balanced(dr, eta, alpha)
        est = TriangleEstimates(
            delta_random=dr,
            delta_random_balanced=drb,
            delta_triangle=dt,
            avg_d=0.0,
            avg_d2=0.0,
        )
        new_beta = update_beta(delta_b, est, warnings)
        new_alpha = update_alpha(eta, rho, new_beta, warnings)
        move = max(abs(new_alpha - alpha), abs(new_beta - beta))
        ab_trace.append(
            {"iteration": it, "alpha": new_alpha, "beta": new_beta, "delta": move}
        )
        alpha, beta = new_alpha, new_beta
        if move < cfg.ab_tol:
            break

    return ModelParams(
        rho=rho,
        alpha=alpha,
        beta=beta,
        eta=eta,
        delta_b=delta_b,
        learn_log=[{"em": em_trace, "alternating": ab_trace}],
        warnings=warnings,
    )
