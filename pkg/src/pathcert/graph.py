"""Immutable simple graphs over bit-mask adjacency rows.

Vertices are the ints 0..n-1.  Row ``adj[v]`` is an int whose bit ``u`` is
set iff ``uv`` is an edge; the diagonal is always zero and rows are
symmetric.  Set intersections, neighborhoods and component sweeps are all
single big-int operations, which is what the search-heavy callers need at
the scales this package targets (n up to a few hundred).

A graph produced by :func:`induced` keeps an ``origin`` table mapping local
indices back to the graph the chain of subgraphs started from, so vertex
sets found deep inside nested views can be reported in the caller's ids.
``origin`` composes: it always points at the outermost ancestor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset[int]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Set bit positions of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    origin: tuple[int, ...] | None = None

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_degree(self, v: int) -> int:
        return self.adj[v].bit_count() + 1

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def root_id(self, v: int) -> int:
        return v if self.origin is None else self.origin[v]

    def root_ids(self, vs: Iterable[int]) -> VertexSet:
        return frozenset(self.root_id(v) for v in vs)

    def local_ids(self, root_vs: Iterable[int]) -> VertexSet:
        """Inverse of root_ids; raises KeyError for ids not in this view."""
        if self.origin is None:
            out = frozenset(root_vs)
            for v in out:
                if not 0 <= v < self.n:
                    raise KeyError(v)
            return out
        back = {r: i for i, r in enumerate(self.origin)}
        return frozenset(back[r] for r in root_vs)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Simple undirected graph on n >= 1 vertices.

    Self-loops are rejected, duplicate edges collapse, endpoints must be
    valid vertex ids.
    """
    if n < 1:
        raise ValueError("graphs have at least one vertex")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop ({u},{u}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    rows = tuple((~g.adj[v]) & full & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows, g.origin)


def induced(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on s, vertices relabelled 0..|s|-1 in ascending order.

    The new graph's origin points at the outermost ancestor of g, so
    translation through nested views composes automatically.
    """
    vs = sorted(set(s))
    if not vs:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise ValueError("vertex id out of range")
    index = {v: i for i, v in enumerate(vs)}
    keep = mask_of(vs)
    rows = []
    for v in vs:
        row = 0
        for u in bits(g.adj[v] & keep):
            row |= 1 << index[u]
        rows.append(row)
    origin = tuple(g.root_id(v) for v in vs)
    return Graph(len(vs), tuple(rows), origin)


def component_masks(adj: Sequence[int], mask: int) -> list[int]:
    """Connected components of the subgraph on ``mask``, as bit masks.

    Ordered by size descending, then by smallest member id ascending."""
    comps = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= adj[v]
            frontier = grown & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    comps.sort(key=lambda c: (-c.bit_count(), (c & -c).bit_length()))
    return comps


def components(g: Graph) -> list[VertexSet]:
    return [frozenset(bits(m)) for m in component_masks(g.adj, g.full_mask)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.adj, g.full_mask)) == 1


# Named families.

def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def friendship_graph(t: int) -> Graph:
    """t triangles sharing one hub vertex (vertex 0); n = 2t + 1."""
    if t < 1:
        raise ValueError("need at least one triangle")
    edges = []
    for i in range(t):
        u, v = 2 * i + 1, 2 * i + 2
        edges += [(0, u), (0, v), (u, v)]
    return build_graph(2 * t + 1, edges)
