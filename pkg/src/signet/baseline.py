"""STCL baseline: transitive Chung-Lu topology with i.i.d. signs, plus its
analytic expected triangle-type distribution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generate import SIGN_POLICY_IID, generate
from .graph import SignedGraph
from .learn import ModelParams


@dataclass(frozen=True)
class BaselineTriangleExpectation:
    """Triangle-type probabilities under i.i.d. signs with rate eta."""

    p_ppp: float
    p_ppm: float
    p_pmm: float
    p_mmm: float

    def as_dict(self) -> dict[str, float]:
        return {
            "+++": self.p_ppp,
            "++-": self.p_ppm,
            "+--": self.p_pmm,
            "---": self.p_mmm,
        }

    @property
    def balanced(self) -> float:
        return self.p_ppp + self.p_pmm


def analytic_triangle_distribution(eta: float) -> BaselineTriangleExpectation:
    """Binomial(3, eta) split of a triangle's signs."""
    q = 1.0 - eta
    return BaselineTriangleExpectation(
        p_ppp=eta**3,
        p_ppm=3.0 * eta**2 * q,
        p_pmm=3.0 * eta * q**2,
        p_mmm=q**3,
    )


def stcl_generate(g_input: SignedGraph, rho: float, seed: int) -> SignedGraph:
    """Generate with wedge closures for topology but signs drawn i.i.d.
    positive with probability eta, ignoring balance entirely.
    """
    eta = g_input.m_positive / g_input.m
    params = ModelParams(rho=rho, alpha=eta, beta=0.0, eta=eta, delta_b=0.0)
    return generate(g_input, params, seed, sign_policy=SIGN_POLICY_IID)
