"""P4-free machinery: doubling extraction, cotrees, and exact clique/stable sets.

``p4free_extract`` turns any oracle producing empty-or-complete bipartite
pairs into a vertex set whose induced subgraph is P4-free: recursing into
both sides of each pair and taking the union keeps every cross pair
homogeneous, and an induced P4 can never straddle a homogeneous cut.

P4-free graphs (cographs) decompose recursively into disjoint unions and
joins; that cotree yields exact maximum stable sets and cliques by a linear
fold, and since cographs are perfect, alpha * omega >= n, so the larger of
the two has at least ceil(sqrt(n)) vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .graph import Graph, VertexSet, bits, component_masks, induced
from .patterns import find_induced_path
from .witnesses import BipartitePairWitness, PatternEmbedding, verify_bipartite_pair


@dataclass(frozen=True)
class CographDecomposition:
    """Cotree node: a leaf holds one vertex; a union node's children are the
    connected components; a join node's children are the complement's."""

    kind: str  # "leaf" | "union" | "join"
    children: tuple["CographDecomposition", ...] = ()
    vertex: int | None = None

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]  # type: ignore[list-item]
        out: list[int] = []
        for child in self.children:
            out.extend(child.leaves())
        return out


class _Obstruction(Exception):
    def __init__(self, embedding: PatternEmbedding):
        self.embedding = embedding


def cotree(g: Graph):
    """CographDecomposition of g, or a PatternEmbedding of an induced P4.

    A graph is a cograph iff every induced subgraph on >= 2 vertices is
    disconnected or has a disconnected complement, so whenever the recursion
    finds neither split an induced P4 must exist; the first one found (it may
    sit inside a nested part) is returned as the obstruction.
    """
    adj = g.adj
    full = g.full_mask
    co_adj = tuple((~adj[v]) & full & ~(1 << v) for v in range(g.n))

    def build(mask: int) -> CographDecomposition:
        if mask & (mask - 1) == 0:
            return CographDecomposition("leaf", vertex=mask.bit_length() - 1)
        comps = component_masks(adj, mask)
        if len(comps) > 1:
            return CographDecomposition("union", tuple(build(c) for c in comps))
        co_comps = component_masks(co_adj, mask)
        if len(co_comps) > 1:
            return CographDecomposition("join", tuple(build(c) for c in co_comps))
        res = find_induced_path(induced(g, bits(mask)), 4)
        assert res.found, "a connected, co-connected graph on >= 2 vertices induces a P4"
        raise _Obstruction(res.embedding)

    try:
        return build(full)
    except _Obstruction as found:
        return found.embedding


def _set_key(vs: frozenset) -> tuple:
    return (-len(vs), tuple(sorted(vs)))


def cograph_alpha_omega(g: Graph):
    """(maximum stable set, maximum clique) of a cograph, else the P4
    obstruction as a PatternEmbedding.

    Both sets are exact maxima; ties are broken toward the lexicographically
    smallest vertex list.  Returned sets use root ids.
    """
    tree = cotree(g)
    if isinstance(tree, PatternEmbedding):
        return tree

    def fold(node: CographDecomposition) -> tuple[frozenset, frozenset]:
        if node.kind == "leaf":
            single = frozenset([node.vertex])
            return single, single
        parts = [fold(child) for child in node.children]
        if node.kind == "union":
            stable = frozenset().union(*(p[0] for p in parts))
            clique = min((p[1] for p in parts), key=_set_key)
        else:
            stable = min((p[0] for p in parts), key=_set_key)
            clique = frozenset().union(*(p[1] for p in parts))
        return stable, clique

    stable, clique = fold(tree)
    return g.root_ids(stable), g.root_ids(clique)


class OracleError(RuntimeError):
    """The bipartite oracle returned something unusable; the offending
    witness (if any) is attached."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class BipartiteOracle:
    """Produces, for any graph it is handed, an empty or complete bipartite
    pair with both sides >= ceil(c * n), expressed in root ids.

    ``cutoff`` is the smallest subgraph the extraction recursion still hands
    to the oracle; below it a single vertex is taken.  By default it is
    max(2, ceil(1/c)), the point where the side guarantee ceil(c * n) stops
    being meaningful; callers may lower it to 2 to keep recursing on sides
    smaller than 1/c.
    """

    c: Fraction
    fn: Callable[[Graph], BipartitePairWitness]
    cutoff: int | None = None

    def __post_init__(self):
        self.c = Fraction(self.c)
        if not 0 < self.c < 1:
            raise ValueError("c must be in (0, 1)")

    @property
    def effective_cutoff(self) -> int:
        if self.cutoff is not None:
            return max(2, self.cutoff)
        return max(2, math.ceil(1 / self.c))

    def required_side(self, n: int) -> int:
        return max(1, math.ceil(self.c * n))


EXACT_ORACLE_MAX_N = 32


def _find_pair_masks(g: Graph, side: int, kind: str) -> tuple[int, int] | None:
    """First (X, Y) with |X| = |Y| = side and the cross relation all-edges
    (complete) or no-edges (empty); complete backtracking over vertex
    assignments in id order, so absence of a result is a proof."""
    n, adj = g.n, g.adj
    full = g.full_mask
    if 2 * side > n:
        return None
    if kind == "empty":
        compat = tuple((~adj[v]) & full & ~(1 << v) for v in range(n))
    else:
        compat = adj

    def dfs(x: int, y: int, avail_x: int, avail_y: int):
        nx, ny = x.bit_count(), y.bit_count()
        if nx == side and ny == side:
            return x, y
        if nx + (avail_x.bit_count() if nx < side else 0) < side:
            return None
        if ny + (avail_y.bit_count() if ny < side else 0) < side:
            return None
        pool = avail_x | avail_y
        if not pool:
            return None
        v = (pool & -pool).bit_length() - 1
        vb = 1 << v
        if nx < side and avail_x & vb:
            hit = dfs(x | vb, y, avail_x & ~vb, avail_y & compat[v] & ~vb)
            if hit:
                return hit
        if ny < side and avail_y & vb and x:  # first vertex always goes to X
            hit = dfs(x, y | vb, avail_x & compat[v] & ~vb, avail_y & ~vb)
            if hit:
                return hit
        return dfs(x, y, avail_x & ~vb, avail_y & ~vb)

    return dfs(0, 0, full, full)


def exact_bipartite_oracle(c: Fraction, cutoff: int | None = None) -> BipartiteOracle:
    """Complete desk-scale oracle (n <= 32): exhaustive search for an empty,
    then a complete, pair with sides exactly ceil(c * n)."""
    c = Fraction(c)

    def fn(g: Graph) -> BipartitePairWitness:
        if g.n > EXACT_ORACLE_MAX_N:
            raise ValueError(f"exact oracle limited to n <= {EXACT_ORACLE_MAX_N}, got {g.n}")
        side = max(1, math.ceil(c * g.n))
        for kind in ("empty", "complete"):
            hit = _find_pair_masks(g, side, kind)
            if hit:
                xs, ys = hit
                return BipartitePairWitness(kind, g.root_ids(bits(xs)), g.root_ids(bits(ys)))
        raise OracleError(f"no empty or complete pair with sides {side} exists (n={g.n})")

    return BipartiteOracle(c, fn, cutoff)


def p4free_extract(g: Graph, oracle: BipartiteOracle) -> VertexSet:
    """A vertex set S with G[S] P4-free, grown by recursing into both sides
    of oracle pairs and taking the union.

    With an oracle honoring its side guarantee all the way down, |S| is at
    least n^c' / 2 for c' = log 2 / log(1/c).  Every oracle answer is
    re-verified against g; a bad one raises OracleError with the witness
    attached.  ``g`` must be a root graph (no origin).
    """
    if g.origin is not None:
        raise ValueError("pass the root graph; oracle witnesses use root ids")
    cutoff = oracle.effective_cutoff

    def recurse(members: frozenset) -> frozenset:
        if len(members) < cutoff:
            return frozenset([min(members)])
        sub = induced(g, members)
        w = oracle.fn(sub)
        if not isinstance(w, BipartitePairWitness):
            raise OracleError(f"oracle returned {type(w).__name__}", witness=w)
        verdict = verify_bipartite_pair(g, w)
        if not verdict:
            raise OracleError(f"oracle witness rejected: {verdict.reason}", witness=w)
        if not (w.X | w.Y) <= members:
            raise OracleError("oracle witness leaves the current subgraph", witness=w)
        need = oracle.required_side(len(members))
        if min(len(w.X), len(w.Y)) < need:
            raise OracleError(
                f"oracle sides {len(w.X)},{len(w.Y)} below the promised {need}", witness=w)
        return recurse(w.X) | recurse(w.Y)

    return recurse(frozenset(range(g.n)))


@dataclass(frozen=True)
class ExponentBound:
    """c' with c^(c') >= 1/2, i.e. c' = log 2 / log(1/c).

    Exact (a Fraction) when 1/c is a power of two, in which case the
    defining inequality is certified in integer arithmetic and holds with
    equality.  Otherwise the value is a float and ``check_ok`` certifies the
    inequality at a rational lower bound of it (c^x decreases in x, so any
    exponent below the true c' satisfies it).
    """

    c: Fraction
    value: Fraction | float
    exact: bool
    check_ok: bool


def _rational_power_check(c: Fraction, p: int, q: int) -> bool:
    """c^(p/q) >= 1/2 for positive p, q, decided exactly: equivalent to
    c^p * 2^q >= 1."""
    return c ** p * 2 ** q >= 1


def exponent_for(c: Fraction) -> ExponentBound:
    c = Fraction(c)
    if not 0 < c < 1:
        raise ValueError("c must be in (0, 1)")
    inv = 1 / c
    if inv.denominator == 1 and inv.numerator & (inv.numerator - 1) == 0:
        m = inv.numerator.bit_length() - 1
        value = Fraction(1, m)
        ok = _rational_power_check(c, value.numerator, value.denominator)
        return ExponentBound(c, value, True, ok)
    value = 1.0 / (math.log2(inv.numerator) - math.log2(inv.denominator))
    q = 64
    p = max(1, math.floor(value * q) - 1)  # strictly below the true exponent
    ok = _rational_power_check(c, p, q)
    return ExponentBound(c, value, False, ok)
