"""Certified decisions: is P an entropy maximizer, and is a graph symmetric.

Both questions reduce to exact combinatorics, so no floating point enters
the verdicts. A distribution maximizes the entropy of G exactly when the
support can be covered uniformly by maximum-weight independent sets; a
graph is symmetric (uniform distribution maximizes) exactly when its
fractional chromatic number equals n/alpha. Verdicts carry an integer
cover-multiset certificate whenever the answer is yes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .entropy import entropy
from .errors import NotRational
from .exactlp import (
    CoverMultiset,
    FractionalColoring,
    fractional_chromatic_number,
    integralize_cover,
    uniform_cover_feasible,
)
from .graphs import (
    Distribution,
    Graph,
    IndependentSet,
    alpha,
    enumerate_maximal_independent_sets,
    enumerate_maximum_weighted_independent_sets,
    max_weighted_independent_set,
)

REASON_NO_UNIFORM_COVER = "NoUniformCover"


@dataclass(frozen=True)
class MaximizerVerdict:
    """Whether P maximizes H(G, .), with an exact certificate when it does."""

    is_maximizer: bool
    chi_f_support: Fraction
    alpha_p: Fraction
    certificate: CoverMultiset | None
    reason: str | None


@dataclass(frozen=True)
class SymmetryVerdict:
    """Whether the uniform distribution maximizes H(G, .)."""

    is_symmetric: bool
    chi_f: Fraction
    n_over_alpha: Fraction
    certificate: CoverMultiset | None


def is_entropy_maximizer(g: Graph, p: Distribution, cap: int | None = None) -> MaximizerVerdict:
    """Decide exactly whether P maximizes the entropy of G.

    Works on the support-induced subgraph: enumerates every independent set
    attaining the maximum P-weight (sets are canonicalized to live inside
    the support, where they are automatically maximal), then asks the exact
    LP whether those sets can cover the support uniformly. Feasibility is
    the verdict; the witness is scaled to an integer cover multiset.
    """
    if not p.exact:
        raise NotRational("exact-rational distribution required for the decision")
    if p.n != g.n:
        raise ValueError("distribution length differs from vertex count")
    supp = list(p.support)
    sub, relabel = g.induced(supp)
    back = {new: old for old, new in relabel.items()}
    p_sub = Distribution(p.restricted_to(supp))
    chi_supp = fractional_chromatic_number(sub, cap)[0]
    alpha_p = Fraction(max_weighted_independent_set(sub, p_sub.weights, cap).value)
    family = enumerate_maximum_weighted_independent_sets(sub, p_sub, cap)
    cover = uniform_cover_feasible(sub, family, range(sub.n))
    if cover is None:
        return MaximizerVerdict(
            is_maximizer=False,
            chi_f_support=chi_supp,
            alpha_p=alpha_p,
            certificate=None,
            reason=REASON_NO_UNIFORM_COVER,
        )
    lifted = FractionalColoring(
        {
            IndependentSet(g, (back[v] for v in s.members)): w
            for s, w in cover.weights.items()
        }
    )
    certificate = integralize_cover(lifted)
    return MaximizerVerdict(
        is_maximizer=True,
        chi_f_support=chi_supp,
        alpha_p=alpha_p,
        certificate=certificate,
        reason=None,
    )


def is_symmetric(g: Graph, cap: int | None = None) -> SymmetryVerdict:
    """Decide exactly whether the uniform distribution maximizes H(G, .).

    Compares chi_f with n/alpha as exact rationals. When they agree, a
    uniform cover of all vertices by maximum-size independent sets exists
    and is extracted as the certificate.
    """
    if g.n == 0:
        raise ValueError("symmetry of the empty graph is undefined")
    chi = fractional_chromatic_number(g, cap)[0]
    a = alpha(g, cap).value
    n_over_alpha = Fraction(g.n, a)
    if chi != n_over_alpha:
        return SymmetryVerdict(False, chi, n_over_alpha, None)
    maximum_sets = [
        s for s in enumerate_maximal_independent_sets(g, cap) if len(s) == a
    ]
    cover = uniform_cover_feasible(g, maximum_sets, range(g.n))
    if cover is None:
        raise RuntimeError(
            "internal error: chi_f = n/alpha but no uniform maximum-set cover"
        )
    return SymmetryVerdict(True, chi, n_over_alpha, integralize_cover(cover))


def entropy_equals_log_chi_f(
    g: Graph, p: Distribution, tol: float, cap: int | None = None
) -> bool:
    """Numerical cross-check: does H(G,P) equal lg chi_f of the support graph?

    Test-side validation only; the combinatorial verdicts above are the
    actual decision procedure. True when the solver value is within
    tol + (solver gap) of the exact logarithm.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    sub, _ = g.induced(p.support)
    chi = fractional_chromatic_number(sub, cap)[0]
    res = entropy(g, p, cap=cap)
    return abs(res.value - math.log2(chi)) <= tol + res.gap
