"""Shared test utilities: named graphs, random instances, tolerance math."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from gelab.graphs import Distribution, Graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def hypercube_q3() -> Graph:
    edges = []
    for u in range(8):
        for bit in range(3):
            v = u ^ (1 << bit)
            if u < v:
                edges.append((u, v))
    return Graph(8, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def rand_graph(rng: random.Random, n: int, p_edge: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p_edge
    ]
    return Graph(n, edges)


def rand_spanning_subgraph(rng: random.Random, g: Graph) -> Graph:
    edges = [e for e in g.edges if rng.random() < 0.5]
    return Graph(g.n, edges)


def rand_rational_distribution(
    rng: random.Random, n: int, m_max: int = 40, strict: bool = True
) -> Distribution:
    """Random distribution with weights n_v / m for a random denominator m."""
    if strict:
        m = rng.randint(n, m_max)
        counts = [1] * n
        for _ in range(m - n):
            counts[rng.randrange(n)] += 1
    else:
        m = rng.randint(1, m_max)
        counts = [0] * n
        for _ in range(m):
            counts[rng.randrange(n)] += 1
    return Distribution([Fraction(c, m) for c in counts])


def continuity_delta(p: Distribution, h_value: float, eps: float) -> float:
    """Perturbation radius under which the entropy moves by less than eps.

    delta = (1/2) * min_v p_v * min(1, eps / (n * H)); the second factor is
    1 when H is zero (the bound is vacuous for empty-ish graphs).
    """
    min_p = min(float(w) for w in p.weights)
    if h_value <= 0:
        scale = 1.0
    else:
        scale = min(1.0, eps / (p.n * h_value))
    return 0.5 * min_p * scale


def perturb_within(rng: random.Random, p: Distribution, delta: float) -> Distribution:
    """A float distribution within sup-distance delta of p (still positive)."""
    while True:
        w = [float(x) + rng.uniform(-delta, delta) * 0.999 for x in p.weights]
        # repair the sum by spreading the deficit over the largest entries;
        # retries keep the sup-norm guarantee honest
        deficit = 1.0 - sum(w)
        w = [x + deficit / len(w) for x in w]
        if all(x > 0 for x in w):
            sup = max(abs(float(a) - b) for a, b in zip(p.weights, w))
            if sup < delta:
                return Distribution([x / sum(w) for x in w])
