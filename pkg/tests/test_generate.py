import math
import random
from collections import Counter

import pytest

from signet.errors import NoCommonNeighborError, StallError
from signet.generate import (
    SIGN_POLICY_IID,
    GenerationState,
    choose_wedge_sign,
    fcl_initialize,
    generate,
    generation_step,
)
from signet.graph import Sign, build_graph, build_sampling_vector
from signet.learn import ModelParams
from signet.metrics import compute_eta
from tests.conftest import power_law_signed_graph


def make_params(rho=0.3, alpha=0.8, beta=0.9, eta=0.85):
    return ModelParams(rho=rho, alpha=alpha, beta=beta, eta=eta, delta_b=0.8)


def audit(state):
    """Shadow consistency check between live edges and adjacency."""
    assert len(state.live) == state.target_m
    for (u, v), s in state.live.items():
        assert u < v
        assert state.adj[u][v] is s
        assert state.adj[v][u] is s
    edge_count = sum(len(a) for a in state.adj) // 2
    assert edge_count == len(state.live)


def test_fcl_forced_k3():
    # pi over K3's vertices with M = 3: only three legal pairs exist.
    pi = [0, 0, 1, 1, 2, 2]
    state = fcl_initialize(pi, 3, eta=1.0, rng=random.Random(0), n=3)
    assert set(state.live) == {(0, 1), (0, 2), (1, 2)}


def test_fcl_eta_one_all_positive():
    g = power_law_signed_graph(200, 600, seed=1)
    pi = build_sampling_vector(g)
    state = fcl_initialize(pi, g.m, eta=1.0, rng=random.Random(0), n=g.n)
    assert all(s is Sign.POSITIVE for s in state.live.values())


def test_fcl_positive_count_is_rounded_eta_m():
    g = power_law_signed_graph(200, 600, seed=2)
    pi = build_sampling_vector(g)
    state = fcl_initialize(pi, g.m, eta=0.73, rng=random.Random(0), n=g.n)
    positives = sum(1 for s in state.live.values() if s is Sign.POSITIVE)
    assert positives == round(0.73 * g.m)


def test_fcl_stall_on_impossible_target():
    # Only one legal pair exists but two edges requested.
    with pytest.raises(StallError):
        fcl_initialize([0, 1], 2, eta=0.5, rng=random.Random(0), n=2)


def test_fcl_endpoint_counts_match_expectation():
    # Mean per-vertex endpoint count over seeded runs within 4 sigma of d_i,
    # allowing the first-order rejection bias ~ d^2 / 2M that self-loop and
    # duplicate rejection takes from high-degree vertices.
    n, m = 2000, 4000
    g = power_law_signed_graph(n, m, seed=3, gamma=3.0)
    pi = build_sampling_vector(g)
    runs = 20
    totals = Counter()
    for r in range(runs):
        state = fcl_initialize(pi, m, eta=0.5, rng=random.Random(100 + r), n=g.n)
        for (u, v) in state.live:
            totals[u] += 1
            totals[v] += 1
    two_m = len(pi)
    for v in range(n):
        d = g.degree(v)
        if d == 0:
            assert totals[v] == 0
            continue
        p = d / two_m
        mean = totals[v] / runs
        sigma = math.sqrt(two_m * p * (1 - p) / runs)
        bias = d * d / two_m
        assert abs(mean - d) <= 4 * sigma + bias + 1.0


def wedge_state(edges, n, rho=0.0, alpha=0.5, beta=1.0):
    state = GenerationState(
        n=n, pi=[], target_m=len(edges), rho=rho, alpha=alpha, beta=beta,
        eta=0.5, rng=random.Random(0),
    )
    for u, v, s in edges:
        state.insert(u, v, s)
    return state


def test_choose_wedge_sign_single_balanced_wedge():
    state = wedge_state([(0, 2, Sign.POSITIVE), (1, 2, Sign.POSITIVE)], 3)
    assert choose_wedge_sign(state, 0, 1, True, alpha=0.5) is Sign.POSITIVE


def test_choose_wedge_sign_single_mixed_wedge():
    state = wedge_state([(0, 2, Sign.POSITIVE), (1, 2, Sign.NEGATIVE)], 3)
    assert choose_wedge_sign(state, 0, 1, True, alpha=0.5) is Sign.NEGATIVE


def test_choose_wedge_sign_majority_and_unbalanced_branch():
    # Common neighbors 2, 3, 4 with wedge products +, +, -.
    edges = [
        (0, 2, Sign.POSITIVE), (1, 2, Sign.POSITIVE),
        (0, 3, Sign.NEGATIVE), (1, 3, Sign.NEGATIVE),
        (0, 4, Sign.POSITIVE), (1, 4, Sign.NEGATIVE),
    ]
    state = wedge_state(edges, 5)
    assert choose_wedge_sign(state, 0, 1, True, alpha=0.5) is Sign.POSITIVE
    assert choose_wedge_sign(state, 0, 1, False, alpha=0.5) is Sign.NEGATIVE


def test_choose_wedge_sign_tie_uses_alpha():
    edges = [
        (0, 2, Sign.POSITIVE), (1, 2, Sign.POSITIVE),
        (0, 3, Sign.POSITIVE), (1, 3, Sign.NEGATIVE),
    ]
    state = wedge_state(edges, 4)
    draws = Counter(
        choose_wedge_sign(state, 0, 1, True, alpha=0.8) for _ in range(2000)
    )
    frac_pos = draws[Sign.POSITIVE] / 2000
    assert abs(frac_pos - 0.8) < 3 * math.sqrt(0.8 * 0.2 / 2000)


def test_choose_wedge_sign_no_common_neighbor():
    state = wedge_state([(0, 2, Sign.POSITIVE), (1, 3, Sign.POSITIVE)], 4)
    with pytest.raises(NoCommonNeighborError):
        choose_wedge_sign(state, 0, 1, True, alpha=0.5)


def test_rho_zero_sign_frequency_matches_alpha():
    g = power_law_signed_graph(300, 1200, seed=4)
    pi = build_sampling_vector(g)
    alpha = 0.7
    state = fcl_initialize(
        pi, g.m, eta=0.5, rng=random.Random(9), n=g.n,
        rho=0.0, alpha=alpha, beta=0.5,
    )
    pos = 0
    steps = 5000
    for _ in range(steps):
        before = set(state.live)
        generation_step(state)
        new = set(state.live) - before
        (key,) = new
        if state.live[key] is Sign.POSITIVE:
            pos += 1
    frac = pos / steps
    assert abs(frac - alpha) < 3.5 * math.sqrt(alpha * (1 - alpha) / steps)


def test_rho_one_every_insertion_closes_a_triangle():
    g = power_law_signed_graph(100, 800, seed=5)
    pi = build_sampling_vector(g)
    state = fcl_initialize(
        pi, g.m, eta=0.8, rng=random.Random(2), n=g.n,
        rho=1.0, alpha=0.8, beta=0.9,
    )
    for _ in range(300):
        before = set(state.live)
        generation_step(state)
        new = set(state.live) - before
        if not new:
            continue  # the evicted edge may coincide with an old key
        (key,) = new
        u, v = key
        # Edge inserted via wedge closure: at least one common neighbor,
        # unless the step fell back to random insertion (walk failure).
        common = set(state.adj[u]) & set(state.adj[v])
        assert state.steps_done > 0
        if common:
            assert len(common) >= 1


def test_collision_pushes_vertices_to_queue_and_consumes_them_first():
    # Two vertices, one possible edge which already exists: the random
    # branch must collide, enqueue both endpoints, and consume the queue
    # before any new pi draw.
    pi = [0, 1, 0, 1]
    state = fcl_initialize(pi, 1, eta=1.0, rng=random.Random(0), n=3)
    state.rho = 0.0
    state.alpha = 1.0
    # Seed the adjacency with edge (0,1); inserting (0,1) again collides.
    assert (0, 1) in state.live
    state.pending.append(0)
    state.pending.append(1)
    assert state.next_vertex() == (0, True)
    assert state.next_vertex() == (1, True)


def test_step_count_invariant_and_audit():
    g = power_law_signed_graph(200, 800, seed=6)
    pi = build_sampling_vector(g)
    state = fcl_initialize(
        pi, g.m, eta=0.8, rng=random.Random(3), n=g.n,
        rho=0.4, alpha=0.8, beta=0.9,
    )
    for i in range(400):
        generation_step(state)
        if i % 50 == 0:
            audit(state)
    audit(state)


def test_eviction_is_fifo():
    pi = list(range(10)) * 4
    state = fcl_initialize(pi, 8, eta=0.5, rng=random.Random(4), n=10,
                           rho=0.0, alpha=0.5, beta=0.5)
    first_key = next(iter(state.live))
    generation_step(state)
    assert first_key not in state.live
    second_key = next(iter(state.live))
    generation_step(state)
    assert second_key not in state.live


def test_generate_preserves_edge_count_and_n():
    g = power_law_signed_graph(300, 1000, seed=7)
    out = generate(g, make_params(), seed=0)
    assert out.m == g.m
    assert out.n == g.n


def test_generate_deterministic():
    g = power_law_signed_graph(200, 700, seed=8)
    a = generate(g, make_params(), seed=123)
    b = generate(g, make_params(), seed=123)
    assert a.edges == b.edges
    c = generate(g, make_params(), seed=124)
    assert a.edges != c.edges


def test_generate_degree_preservation():
    n, m = 2000, 8000
    g = power_law_signed_graph(n, m, seed=9)
    params = make_params(rho=0.3, alpha=0.8, beta=0.9, eta=0.8)
    runs = 20
    mean_deg = [0.0] * n
    for r in range(runs):
        out = generate(g, params, seed=1000 + r)
        for v, d in enumerate(out.degrees()):
            mean_deg[v] += d / runs
    input_deg = g.degrees()
    l1 = sum(abs(a - b) for a, b in zip(mean_deg, input_deg))
    rel_l1 = l1 / sum(input_deg)
    assert rel_l1 < 0.1


def test_generate_iid_policy_sign_rate():
    g = power_law_signed_graph(300, 1200, seed=10, eta=0.9)
    eta = compute_eta(g)
    params = ModelParams(rho=0.3, alpha=eta, beta=0.0, eta=eta, delta_b=0.0)
    out = generate(g, params, seed=5, sign_policy=SIGN_POLICY_IID)
    frac = out.m_positive / out.m
    assert abs(frac - eta) < 4 * math.sqrt(eta * (1 - eta) / out.m)
