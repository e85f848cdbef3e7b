"""Total dichotomy: a guaranteed-length induced path or an empty bipartite pair.

Given a connected graph whose every closed neighborhood has at most D
vertices, and an absolute side target T, ``path_or_empty_bipartite`` returns
either an induced path starting at the requested vertex with at least
ceil(n / (2 (T + D))) vertices, or two disjoint vertex sets of size >= T each
with no edges between them.  The construction grows the path into the
largest component that survives deleting the start's closed neighborhood;
when that component is not large enough to recurse into, the leftover
components themselves form the empty pair.

Thresholds are absolute counts, so they pass through the recursion
unchanged; with T = ceil(c n) and D = ceil(eps n) the path guarantee
specializes to 1 / (2 (eps + c)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, VertexSet, bits, component_masks
from .witnesses import BipartitePairWitness, InducedPathWitness


@dataclass(frozen=True)
class ExtractorParams:
    T: int  # required size of each side of an empty pair
    D: int  # bound on every closed degree of the input graph

    def __post_init__(self):
        if self.T < 1:
            raise ValueError("T must be at least 1")
        if self.D < 1:
            raise ValueError("D must be at least 1")


def path_guarantee(n: int, params: ExtractorParams) -> int:
    """Minimum number of path vertices promised for an n-vertex input."""
    denom = 2 * (params.T + params.D)
    return -(-n // denom)


def split_small_components(comps: Sequence[VertexSet], target: int) -> tuple[VertexSet, VertexSet]:
    """Greedily pack whole components, in the given order, into side A until
    |A| >= target; the rest is side B.

    Raises when the packing cannot give both sides >= target (e.g. the total
    is below 3 * target, or one component dominates).  Under the intended
    contract - every component at most target, total at least 3 * target -
    the result additionally satisfies |A| < 2 * target.
    """
    if target < 1:
        raise ValueError("target must be at least 1")
    a: set[int] = set()
    cut = 0
    for comp in comps:
        if len(a) >= target:
            break
        a |= comp
        cut += 1
    b: set[int] = set()
    for comp in comps[cut:]:
        b |= comp
    if len(a) < target or len(b) < target:
        raise ValueError(
            f"cannot split component sizes {[len(c) for c in comps]} into two sides of {target}")
    return frozenset(a), frozenset(b)


def _is_connected_mask(adj, mask: int) -> bool:
    return len(component_masks(adj, mask)) == 1


def _greedy_split_masks(comps: list[int], target: int) -> tuple[int, int]:
    a = 0
    cut = 0
    for comp in comps:
        if a.bit_count() >= target:
            break
        a |= comp
        cut += 1
    b = 0
    for comp in comps[cut:]:
        b |= comp
    return a, b


def path_or_empty_bipartite(g: Graph, x: int, params: ExtractorParams,
                            trace: list | None = None):
    """Either an induced path starting at x with >= ceil(n / (2(T+D)))
    vertices, or an empty bipartite pair with both sides >= T.

    Preconditions: g connected, 0 <= x < n, and every closed degree <= D.
    The witness is expressed in root ids (via g.origin).  ``trace``, if
    given, collects one dict per recursion level.
    """
    if not 0 <= x < g.n:
        raise ValueError(f"start vertex {x} not in 0..{g.n - 1}")
    for v in range(g.n):
        cd = g.closed_degree(v)
        if cd > params.D:
            raise ValueError(
                f"closed degree of vertex {v} is {cd}, above the bound D={params.D}")
    if not _is_connected_mask(g.adj, g.full_mask):
        raise ValueError("input graph is disconnected")

    T, D = params.T, params.D
    adj = g.adj

    def note(**fields):
        if trace is not None:
            trace.append(fields)

    def recurse(mask: int, start: int):
        m = mask.bit_count()
        if 3 * T + D >= m:
            if m == 1:
                note(n=m, case="base")
                return ("path", [start])
            nb = adj[start] & mask
            assert nb, "connected subgraph of size >= 2 must give the start a neighbor"
            y = (nb & -nb).bit_length() - 1
            note(n=m, case="base")
            return ("path", [start, y])
        closed = (adj[start] | (1 << start)) & mask
        u = mask & ~closed
        comps = component_masks(adj, u)
        c1 = comps[0]
        c1_size = c1.bit_count()
        if c1_size >= m - D - T:
            y = -1
            for v in bits(adj[start] & mask):
                if adj[v] & c1:
                    y = v
                    break
            assert y >= 0, "some neighbor of the start must reach the largest component"
            sub = c1 | (1 << y)
            assert _is_connected_mask(adj, sub)
            note(n=m, case="grow", c1=c1_size, via=y)
            result = recurse(sub, y)
            if result[0] == "path":
                return ("path", [start] + result[1])
            return result
        if c1_size >= T:
            note(n=m, case="middle-split", c1=c1_size)
            return ("pair", c1, u & ~c1)
        a, b = _greedy_split_masks(comps, T)
        assert a.bit_count() >= T and b.bit_count() >= T, \
            "small components must pack into two sides of size >= T"
        note(n=m, case="small-split", c1=c1_size)
        return ("pair", a, b)

    result = recurse(g.full_mask, x)
    if result[0] == "path":
        return InducedPathWitness(tuple(g.root_id(v) for v in result[1]))
    _, amask, bmask = result
    return BipartitePairWitness("empty", g.root_ids(bits(amask)), g.root_ids(bits(bmask)))
