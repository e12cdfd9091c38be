"""Graphs, independent sets, vertex distributions, and the weighted-alpha oracles.

Vertices are always labelled 0..n-1. Adjacency is kept both as a canonical
edge tuple (for hashing/equality) and as per-vertex bitmasks (for the
enumeration inner loops). All types are immutable values; every operation
here is pure, so results can be cached and shared freely across threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapExceeded, NotRational, VertexNotFound

DEFAULT_CAP = 40
SET_COUNT_CAP = 10**6


def resolve_cap(cap: int | None) -> int:
    """Effective enumeration cap: explicit argument, else GELAB_CAP, else 40."""
    if cap is not None:
        return cap
    env = os.environ.get("GELAB_CAP")
    return int(env) if env else DEFAULT_CAP


def _normalize_edges(n: int, edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexNotFound(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    return tuple(sorted(seen))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", _normalize_edges(n, edges))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    @property
    def vertices(self) -> range:
        return range(self.n)

    def adjacency_mask(self, v: int) -> int:
        """Neighbours of v as a bitmask."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def is_independent(self, members: Iterable[int]) -> bool:
        mask = 0
        for v in members:
            self._check_vertex(v)
            mask |= 1 << v
        return all(self._adj[v] & mask == 0 for v in _bits(mask))

    def induced(self, keep: Sequence[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced by `keep`, relabelled 0..k-1 in `keep`'s sorted order.

        Returns the subgraph and the old->new label map.
        """
        order = sorted(set(keep))
        for v in order:
            self._check_vertex(v)
        relabel = {old: new for new, old in enumerate(order)}
        edges = [
            (relabel[u], relabel[v])
            for u, v in self.edges
            if u in relabel and v in relabel
        ]
        return Graph(len(order), edges), relabel

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexNotFound(f"vertex {v} not in 0..{self.n - 1}")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={len(self.edges)})"


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


@dataclass(frozen=True, eq=False)
class IndependentSet:
    """A vertex subset of a specific graph with no internal edges."""

    graph: Graph
    members: frozenset[int]

    def __init__(self, graph: Graph, members: Iterable[int]):
        members = frozenset(members)
        mask = 0
        for v in members:
            graph._check_vertex(v)
            mask |= 1 << v
        for v in members:
            if graph._adj[v] & mask:
                raise ValueError(f"members {sorted(members)} contain an edge at vertex {v}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_hash", hash((graph._hash, members)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndependentSet):
            return NotImplemented
        return self.members == other.members and self.graph == other.graph

    def __hash__(self) -> int:
        return self._hash

    def characteristic_vector(self) -> tuple[int, ...]:
        """0/1 coordinates over the owning graph's vertices (a VP(G) vertex)."""
        return tuple(1 if v in self.members else 0 for v in range(self.graph.n))

    def weight(self, weights: Sequence) -> object:
        """Total weight of the members under a vertex-indexed weight vector."""
        total = 0
        for v in sorted(self.members):
            total = total + weights[v]
        return total

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"IndependentSet({sorted(self.members)})"


@dataclass(frozen=True)
class Distribution:
    """Vertex-indexed probability weights, exact-rational or floating point."""

    weights: tuple
    exact: bool

    def __init__(self, weights: Sequence):
        weights = tuple(weights)
        if not weights:
            raise ValueError("distribution needs at least one vertex")
        exact = all(isinstance(w, (int, Fraction)) for w in weights)
        if exact:
            weights = tuple(Fraction(w) for w in weights)
            if any(w < 0 for w in weights):
                raise ValueError("negative probability weight")
            if sum(weights) != 1:
                raise ValueError(f"rational weights sum to {sum(weights)}, not 1")
        else:
            weights = tuple(float(w) for w in weights)
            if any(w < 0 for w in weights):
                raise ValueError("negative probability weight")
            if abs(sum(weights) - 1.0) > 1e-12:
                raise ValueError(f"weights sum to {sum(weights)!r}, not 1 within 1e-12")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "exact", exact)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        return cls([Fraction(1, n)] * n)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, w in enumerate(self.weights) if w > 0)

    def __getitem__(self, v: int):
        return self.weights[v]

    def restricted_to(self, keep: Sequence[int]) -> tuple:
        """Weights re-indexed by `keep`'s sorted order (no renormalization)."""
        return tuple(self.weights[v] for v in sorted(keep))


@dataclass(frozen=True)
class WeightedAlpha:
    """Maximum independent-set weight together with a witness attaining it."""

    value: object
    witness: IndependentSet


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _maximal_independent_masks(adj: tuple[int, ...], n: int) -> list[int]:
    """All inclusion-maximal independent sets as bitmasks.

    Bron-Kerbosch with pivoting, run on the complement (maximal independent
    sets of G are maximal cliques of ~G). The pivot is the vertex of P | X
    with the fewest complement-neighbours inside P, ties broken by label,
    which fixes the recursion order; output is re-sorted anyway so callers
    see one canonical order.
    """
    full = (1 << n) - 1
    comp = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot, best = -1, n + 1
        pux = p | x
        while pux:
            low = pux & -pux
            u = low.bit_length() - 1
            pux ^= low
            d = (comp[u] & p).bit_count()
            if d < best:
                pivot, best = u, d
        branch = p & ~comp[pivot]
        while branch:
            low = branch & -branch
            v = low.bit_length() - 1
            branch ^= low
            expand(r | low, p & comp[v], x & comp[v])
            p ^= low
            x |= low
    if n:
        expand(0, full, 0)
    else:
        out.append(0)
    return out


@lru_cache(maxsize=2048)
def _maximal_sets_cached(graph: Graph) -> tuple[tuple[int, ...], ...]:
    masks = _maximal_independent_masks(graph._adj, graph.n)
    return tuple(sorted(tuple(_bits(m)) for m in masks))


def enumerate_maximal_independent_sets(g: Graph, cap: int | None = None) -> list[IndependentSet]:
    """Every inclusion-maximal independent set, lexicographic by member list."""
    limit = resolve_cap(cap)
    if g.n > limit:
        raise CapExceeded(f"graph has {g.n} vertices, enumeration cap is {limit}")
    return [IndependentSet(g, members) for members in _maximal_sets_cached(g)]


def alpha(g: Graph, cap: int | None = None) -> WeightedAlpha:
    """Maximum independent-set size with a witness (ties by enumeration order)."""
    if g.n == 0:
        raise ValueError("alpha of the empty graph on 0 vertices is undefined")
    best = None
    for s in enumerate_maximal_independent_sets(g, cap):
        if best is None or len(s) > len(best):
            best = s
    return WeightedAlpha(value=len(best), witness=best)


def max_weighted_independent_set(g: Graph, weights: Sequence, cap: int | None = None) -> WeightedAlpha:
    """Maximum total weight of an independent set, for nonnegative weights.

    The optimum over nonnegative weights is attained at a maximal independent
    set of the support-induced subgraph; the witness is reported within the
    support (zero-weight vertices are never added to it). Ties are broken by
    the deterministic enumeration order.
    """
    if len(weights) != g.n:
        raise ValueError("weight vector length differs from vertex count")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    support = [v for v in range(g.n) if weights[v] > 0]
    if not support:
        zero = weights[0] * 0 if g.n else 0
        return WeightedAlpha(value=zero, witness=IndependentSet(g, ()))
    sub, relabel = g.induced(support)
    back = {new: old for old, new in relabel.items()}
    best_val = None
    best_set = None
    for members in _maximal_sets_if_capped(sub, cap):
        val = sum(weights[back[v]] for v in members)
        if best_val is None or val > best_val:
            best_val = val
            best_set = members
    witness = IndependentSet(g, (back[v] for v in best_set))
    return WeightedAlpha(value=best_val, witness=witness)


def _maximal_sets_if_capped(g: Graph, cap: int | None):
    limit = resolve_cap(cap)
    if g.n > limit:
        raise CapExceeded(f"graph has {g.n} vertices, enumeration cap is {limit}")
    return _maximal_sets_cached(g)


def enumerate_maximum_weighted_independent_sets(
    g: Graph, p: Distribution, cap: int | None = None, set_cap: int = SET_COUNT_CAP
) -> list[IndependentSet]:
    """All independent sets whose P-weight equals the maximum exactly.

    Requires an exact-rational distribution so weight equality is decidable.
    Zero-weight vertices may extend an attaining set without changing its
    weight, so those variants are enumerated too (deduplication is by the
    member set). Aborts with CapExceeded past `set_cap` sets.
    """
    if not p.exact:
        raise NotRational("exact-rational distribution required")
    if p.n != g.n:
        raise ValueError("distribution length differs from vertex count")
    limit = resolve_cap(cap)
    if g.n > limit:
        raise CapExceeded(f"graph has {g.n} vertices, enumeration cap is {limit}")
    target = max_weighted_independent_set(g, p.weights, cap).value
    adj = g._adj
    weights = p.weights
    out: list[tuple[int, ...]] = []

    # Depth-first over vertices in label order; prune with the residual
    # positive weight (an upper bound on what the suffix can still add).
    suffix_pos = [Fraction(0)] * (g.n + 1)
    for v in range(g.n - 1, -1, -1):
        suffix_pos[v] = suffix_pos[v + 1] + (weights[v] if weights[v] > 0 else 0)

    def walk(v: int, chosen_mask: int, total) -> None:
        if total + suffix_pos[v] < target:
            return
        if v == g.n:
            if total == target:
                if len(out) >= set_cap:
                    raise CapExceeded(f"more than {set_cap} maximum-weight sets")
                out.append(tuple(_bits(chosen_mask)))
            return
        if adj[v] & chosen_mask == 0:
            walk(v + 1, chosen_mask | (1 << v), total + weights[v])
        walk(v + 1, chosen_mask, total)

    walk(0, 0, Fraction(0))
    return [IndependentSet(g, members) for members in sorted(out)]
