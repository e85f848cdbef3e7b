"""Shared corpus builders and independent brute-force oracles.

The oracles here intentionally re-derive everything from scratch (subset
enumeration, permutation search, plain edge recounts) so the library is
always checked against a second, dumber route.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from pathcert.graph import Graph, bits, build_graph, mask_of
from pathcert.generators import gnp
from pathcert.rng import SplitMix64, stream


def seeded_connected_graph(seed: int, max_n: int = 60) -> Graph:
    """A connected seeded graph, rebuilt from the largest component of a
    G(n, p) draw so the result is a root graph.  Even seeds use dense p,
    odd seeds sparse p (average degree about 1.2 to 4.5), so both shallow
    and deeply recursive extractor behaviors show up downstream."""
    rng = stream(0xC0FFEE, seed)
    n = rng.randint(1, max_n)
    if seed % 2 == 0:
        p = Fraction(rng.randint(1, 9), 10)
    else:
        p = min(Fraction(1), Fraction(rng.randint(12, 45), 10 * n))
    g = gnp(n, p, rng)
    comp = max(_components_sets(g), key=lambda c: (len(c), -min(c)))
    vs = sorted(comp)
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in comp and v in comp]
    return build_graph(len(vs), edges)


def _components_sets(g: Graph):
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v in seen:
            continue
        comp = {v}
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for w in bits(g.adj[u]):
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def brute_max_stable_size(g: Graph) -> int:
    """Branch-and-bound maximum independent set size (independent oracle)."""
    adj = g.adj
    best = 0

    def grow(mask: int, size: int) -> None:
        nonlocal best
        if size + mask.bit_count() <= best:
            return
        if not mask:
            best = max(best, size)
            return
        v = (mask & -mask).bit_length() - 1
        grow(mask & ~(adj[v] | (1 << v)), size + 1)
        grow(mask & ~(1 << v), size)

    grow(g.full_mask, 0)
    return best


def brute_max_clique_size(g: Graph) -> int:
    full = g.full_mask
    co = Graph(g.n, tuple((~g.adj[v]) & full & ~(1 << v) for v in range(g.n)))
    return brute_max_stable_size(co)


def brute_has_induced_path(g: Graph, k: int) -> bool:
    """Permutation-free brute force: try every k-subset, then every ordering
    of it, checking the induced-path adjacency pattern directly."""
    from itertools import permutations

    if k > g.n:
        return False
    for sub in combinations(range(g.n), k):
        for perm in permutations(sub):
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    want = j == i + 1
                    if g.has_edge(perm[i], perm[j]) != want:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


def brute_has_induced_p4(g: Graph) -> bool:
    """All 4-subsets, all orderings; independent of the search code."""
    return brute_has_induced_path(g, 4)


def edges_within(g: Graph, s) -> int:
    m = mask_of(s)
    return sum((g.adj[v] & m).bit_count() for v in bits(m)) // 2


def best_homogeneous_sizes(g: Graph, epsilon: Fraction) -> tuple[int, int]:
    """(max stable-kind size, max clique-kind size) by full subset
    enumeration - the completeness oracle for the exact strategy."""
    best_stable = 0
    best_clique = 0
    for size in range(1, g.n + 1):
        budget = epsilon * (size * (size - 1) // 2)
        for combo in combinations(range(g.n), size):
            e = edges_within(g, combo)
            if e <= budget:
                best_stable = max(best_stable, size)
            if size * (size - 1) // 2 - e <= budget:
                best_clique = max(best_clique, size)
    return best_stable, best_clique


def planted_sparse_graph(s: int, epsilon: Fraction, rng: SplitMix64) -> Graph:
    """A graph on s vertices with at most epsilon * C(s, 2) edges, placed at
    seeded random positions."""
    cap = int(epsilon * (s * (s - 1) // 2))
    m = rng.randint(0, cap) if cap > 0 else 0
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        u = rng.below(s)
        v = rng.below(s)
        if u == v:
            continue
        chosen.add((min(u, v), max(u, v)))
    return build_graph(s, sorted(chosen))
