"""Finding sparse/dense vertex sets and the quantitative knobs around them.

A set S is an eps-stable set if it spans at most eps * C(|S|, 2) edges and an
eps-clique if it misses at most that many.  Three finder strategies are
offered: a complete subset search for tiny graphs, a greedy peeling heuristic
that scales, and the single-vertex fallback (a lone vertex is an eps-stable
set for every eps).

All thresholds are exact rationals; floats never decide anything here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .graph import Graph, VertexSet, bits, complement, mask_of
from .witnesses import HomogeneousSetWitness

STRATEGIES = ("exact", "greedy-peel", "trivial")
EXACT_MAX_N = 20


def _normalize_strategy(strategy: str) -> str:
    if strategy == "greedy":
        return "greedy-peel"
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; pick one of {STRATEGIES}")
    return strategy


def _witness(g: Graph, kind: str, local: Iterable[int], epsilon: Fraction,
             edge_count: int) -> HomogeneousSetWitness:
    return HomogeneousSetWitness(kind, g.root_ids(local), epsilon, edge_count)


def _edges_in(adj, mask: int) -> int:
    return sum((adj[v] & mask).bit_count() for v in bits(mask)) // 2


def _exact(g: Graph, epsilon: Fraction, target: int) -> HomogeneousSetWitness | None:
    # Complete search, largest subsets first; within a size, one sparse pass
    # then one dense pass, subsets in lexicographic order each time.
    if g.n > EXACT_MAX_N:
        raise ValueError(f"exact strategy limited to n <= {EXACT_MAX_N}, got n = {g.n}")
    for size in range(g.n, target - 1, -1):
        pairs = size * (size - 1) // 2
        budget = epsilon * pairs
        for kind in ("stable", "clique"):
            for combo in combinations(range(g.n), size):
                mask = mask_of(combo)
                edges = _edges_in(g.adj, mask)
                slack = edges if kind == "stable" else pairs - edges
                if slack <= budget:
                    return _witness(g, kind, combo, epsilon, edges)
    return None


def _peel(adj, n: int, epsilon: Fraction) -> tuple[int, int]:
    """Delete a maximum-degree vertex (ties: smallest id) until the edge
    density of the survivors is at most epsilon; returns (mask, edges)."""
    mask = (1 << n) - 1
    edges = _edges_in(adj, mask)
    size = n
    while size > 1:
        if edges <= epsilon * (size * (size - 1) // 2):
            break
        worst, worst_deg = -1, -1
        for v in bits(mask):
            d = (adj[v] & mask).bit_count()
            if d > worst_deg:
                worst, worst_deg = v, d
        mask &= ~(1 << worst)
        edges -= worst_deg
        size -= 1
    return mask, edges


def _greedy(g: Graph, epsilon: Fraction, target: int) -> HomogeneousSetWitness | None:
    sparse_mask, sparse_edges = _peel(g.adj, g.n, epsilon)
    co = complement(g)
    dense_mask, dense_missing = _peel(co.adj, g.n, epsilon)
    sparse_n = sparse_mask.bit_count()
    dense_n = dense_mask.bit_count()
    if sparse_n >= dense_n:
        best_kind, best_mask, best_n = "stable", sparse_mask, sparse_n
        best_edges = sparse_edges
    else:
        best_kind, best_mask, best_n = "clique", dense_mask, dense_n
        best_edges = dense_n * (dense_n - 1) // 2 - dense_missing
    if best_n < target:
        return None
    return _witness(g, best_kind, bits(best_mask), epsilon, best_edges)


def find_epsilon_homogeneous(g: Graph, epsilon: Fraction, target: int,
                             strategy: str) -> HomogeneousSetWitness | None:
    """A sparse or dense set of at least ``target`` vertices, or None.

    exact       complete enumeration (n <= 20); None means no such set of
                either kind exists at any size >= target.
    greedy-peel peel by maximum degree on the graph and on its complement,
                keep the larger survivor if it reaches target.
    trivial     a single vertex (meets target only when target <= 1).
    """
    epsilon = Fraction(epsilon)
    if not 0 <= epsilon <= 1:
        raise ValueError("epsilon must be in [0, 1]")
    if not 1 <= target <= g.n:
        raise ValueError(f"target must be in 1..{g.n}")
    strategy = _normalize_strategy(strategy)
    if strategy == "exact":
        return _exact(g, epsilon, target)
    if strategy == "greedy-peel":
        return _greedy(g, epsilon, target)
    if target > 1:
        return None
    return _witness(g, "stable", [0], epsilon, 0)


def prune_high_degree(g: Graph, s: Iterable[int], epsilon: Fraction) -> VertexSet:
    """One pass: drop the vertices of S whose degree inside S strictly
    exceeds 2 * epsilon * |S| (threshold fixed by the ORIGINAL size).

    When the input is an eps-stable set, an averaging argument shows at most
    half of S is deleted, and every survivor keeps degree at most the
    threshold inside the output.
    """
    members = sorted(set(s))
    if not members:
        raise ValueError("S must be nonempty")
    epsilon = Fraction(epsilon)
    mask = mask_of(members)
    threshold = 2 * epsilon * len(members)
    return frozenset(v for v in members if (g.adj[v] & mask).bit_count() <= threshold)


def _log2_exact(q: Fraction) -> int | None:
    """log2(q) when q is exactly a power of two, else None."""
    num, den = q.numerator, q.denominator
    if num & (num - 1) or den & (den - 1):
        return None
    return num.bit_length() - den.bit_length()


@dataclass(frozen=True)
class DeltaBound:
    """The guarantee constant delta = 2^(-15 k log2(1/eps)^2).

    ``exponent`` is the exact integer exponent when log2(1/eps) is an
    integer (i.e. 1/eps is a power of two); otherwise only the float
    approximation is available and delta is reported symbolically.
    """

    k: int
    epsilon: Fraction
    exponent: int | None
    exponent_float: float

    @property
    def exact(self) -> bool:
        return self.exponent is not None

    @property
    def delta(self) -> Fraction | None:
        if self.exponent is None:
            return None
        if self.exponent >= 0:
            return Fraction(2 ** self.exponent)
        return Fraction(1, 2 ** (-self.exponent))

    @property
    def delta_float(self) -> float:
        try:
            return 2.0 ** self.exponent_float
        except OverflowError:
            return 0.0

    def describe(self) -> str:
        if self.exponent is not None:
            return f"2^{self.exponent}"
        inv = Fraction(1, 1) / self.epsilon
        return (f"2^(-15*{self.k}*log2({inv})^2)"
                f" (exponent ~ {self.exponent_float:.4f})")


def fox_sudakov_delta(k: int, epsilon: Fraction) -> DeltaBound:
    """delta = 2^(-15 k (log2(1/eps))^2), as an exact base-2 exponent when
    1/eps is a power of two."""
    if k < 1:
        raise ValueError("k must be at least 1")
    epsilon = Fraction(epsilon)
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must be in (0, 1]")
    inv = 1 / epsilon
    m = _log2_exact(inv)
    log2_float = math.log2(inv.numerator) - math.log2(inv.denominator)
    exponent_float = -15.0 * k * log2_float * log2_float
    exponent = -15 * k * m * m if m is not None else None
    return DeltaBound(k, epsilon, exponent, exponent_float)


def log2_upper_bound(q: Fraction, precision_bits: int = 64) -> Fraction:
    """A certified rational upper bound on log2(q) for q >= 1.

    Uses only integer arithmetic: log2(x) < bit_length(x), applied to
    q ** precision_bits.
    """
    if q < 1:
        raise ValueError("q must be at least 1")
    num = q.numerator ** precision_bits
    den = q.denominator ** precision_bits
    upper = num.bit_length() - den.bit_length() + 1
    return Fraction(upper, precision_bits)
