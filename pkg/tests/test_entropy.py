"""Entropy solver: certified values, the oracle step, and entropy laws."""

import math
import random
from fractions import Fraction

import pytest

from gelab.constructions import union
from gelab.entropy import PolytopePoint, entropy, linear_minimization_oracle, objective
from gelab.errors import DomainError
from gelab.exactlp import fractional_chromatic_number
from gelab.graphs import (
    Distribution,
    IndependentSet,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
)
from gelab.oracle import brute_entropy

from helpers import (
    continuity_delta,
    perturb_within,
    rand_graph,
    rand_rational_distribution,
    rand_spanning_subgraph,
)

LG_5_2 = math.log2(2.5)


class TestObjective:
    def test_uniform_k2_at_half(self):
        assert objective(Distribution.uniform(2), (0.5, 0.5)) == pytest.approx(1.0)

    def test_support_only_sum(self):
        p = Distribution([Fraction(1), Fraction(0)])
        assert objective(p, (1.0, 0.0)) == 0.0

    def test_c5_at_two_fifths(self):
        p = Distribution.uniform(5)
        assert objective(p, (0.4,) * 5) == pytest.approx(LG_5_2)

    def test_zero_on_support_is_domain_error(self):
        with pytest.raises(DomainError):
            objective(Distribution.uniform(2), (0.5, 0.0))


class TestLinearMinimizationOracle:
    def test_k2_picks_heavier(self):
        s = linear_minimization_oracle(complete_graph(2), [-1.0, -2.0])
        assert s.sorted_members() == (1,)

    def test_c5_equal_gradient_first_in_order(self):
        s = linear_minimization_oracle(cycle_graph(5), [-1.0] * 5)
        assert s.sorted_members() == (0, 2)

    def test_zero_gradient_first_maximal_set(self):
        s = linear_minimization_oracle(cycle_graph(5), [0.0] * 5)
        assert s.sorted_members() == (0, 2)

    def test_positive_gradient_rejected(self):
        with pytest.raises(ValueError):
            linear_minimization_oracle(complete_graph(2), [1.0, -1.0])


class TestPolytopePoint:
    def test_decomposition_must_match_coords(self):
        g = complete_graph(2)
        good = PolytopePoint(
            (0.5, 0.5),
            ((IndependentSet(g, [0]), 0.5), (IndependentSet(g, [1]), 0.5)),
        )
        assert good.coords == (0.5, 0.5)
        with pytest.raises(ValueError):
            PolytopePoint(
                (0.7, 0.5),
                ((IndependentSet(g, [0]), 0.5), (IndependentSet(g, [1]), 0.5)),
            )

    def test_weights_must_be_convex(self):
        g = complete_graph(2)
        with pytest.raises(ValueError):
            PolytopePoint((1.0, 1.0), ((IndependentSet(g, [0]), 1.0),
                                       (IndependentSet(g, [1]), 1.0)))


class TestEntropy:
    def test_empty_graph_is_zero(self):
        for p in (Distribution.uniform(4), Distribution([Fraction(1), 0, 0, 0])):
            res = entropy(empty_graph(4), p)
            assert res.value == 0.0 and res.gap <= 1e-9 and res.converged

    def test_k2_uniform_is_one_bit(self):
        res = entropy(complete_graph(2), Distribution.uniform(2))
        assert res.value == pytest.approx(1.0, abs=1e-12)
        assert res.minimizer.coords == pytest.approx((0.5, 0.5), abs=1e-9)

    def test_c5_uniform_matches_log_chi_f(self):
        res = entropy(cycle_graph(5), Distribution.uniform(5))
        chi, _ = fractional_chromatic_number(cycle_graph(5))
        assert res.value == pytest.approx(math.log2(chi), abs=1e-8)

    def test_value_consistent_with_objective(self):
        g = rand_graph(random.Random(0), 7, 0.4)
        p = Distribution.uniform(7)
        res = entropy(g, p)
        assert res.value == pytest.approx(objective(p, res.minimizer), abs=1e-12)

    def test_result_depends_only_on_support_subgraph(self):
        g = path_graph(4)
        p = Distribution([Fraction(1, 2), Fraction(0), Fraction(1, 2), Fraction(0)])
        sub, _ = g.induced([0, 2])
        res_full = entropy(g, p)
        res_sub = entropy(sub, Distribution.uniform(2))
        assert res_full.value == pytest.approx(res_sub.value, abs=1e-9)
        assert res_full.minimizer.coords[1] == 0.0

    def test_empty_support_rejected(self):
        with pytest.raises(ValueError):
            entropy(complete_graph(2), Distribution.uniform(2), tol=-1)

    def test_unconverged_flag(self):
        g = rand_graph(random.Random(4), 8, 0.5)
        res = entropy(g, Distribution.uniform(8), max_iter=2)
        assert not res.converged and res.gap > 0
        # even unconverged, value stays a valid upper bound
        assert res.value >= brute_entropy(g, Distribution.uniform(8)) - 1e-8

    def test_gap_brackets_bruteforce(self):
        rng = random.Random(5)
        for _ in range(10):
            g = rand_graph(rng, rng.randint(2, 8), rng.random())
            p = rand_rational_distribution(rng, g.n, strict=False)
            res = entropy(g, p)
            ref = brute_entropy(g, p)
            assert res.value - res.gap <= ref + 1e-9
            assert ref <= res.value + 1e-8


class TestEntropyLaws:
    def test_monotone_under_spanning_subgraph(self):
        rng = random.Random(6)
        for _ in range(20):
            g = rand_graph(rng, rng.randint(2, 8), 0.6)
            f = rand_spanning_subgraph(rng, g)
            p = rand_rational_distribution(rng, g.n)
            hf = entropy(f, p)
            hg = entropy(g, p)
            assert hf.value <= hg.value + 2e-9

    def test_subadditive_under_union(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(2, 8)
            f = rand_graph(rng, n, 0.4)
            g = rand_graph(rng, n, 0.4)
            p = rand_rational_distribution(rng, n)
            lhs = entropy(union(f, g), p).value
            rhs = entropy(f, p).value + entropy(g, p).value
            assert lhs <= rhs + 3e-9

    def test_bounded_by_log_chi_f_of_support(self):
        rng = random.Random(8)
        for _ in range(20):
            g = rand_graph(rng, rng.randint(2, 9), rng.random())
            p = rand_rational_distribution(rng, g.n, strict=False)
            sub, _ = g.induced(p.support)
            chi, _ = fractional_chromatic_number(sub)
            res = entropy(g, p)
            assert res.value <= math.log2(chi) + 1e-9 + res.gap

    def test_continuity_within_papers_delta(self):
        rng = random.Random(9)
        for _ in range(5):
            g = rand_graph(rng, rng.randint(3, 7), 0.5)
            p = rand_rational_distribution(rng, g.n)
            base = entropy(g, p)
            for eps in (0.1, 0.01):
                delta = continuity_delta(p, base.value, eps)
                for _ in range(3):
                    q = perturb_within(rng, p, delta)
                    moved = entropy(g, q)
                    assert abs(moved.value - base.value) < eps + 2e-9
