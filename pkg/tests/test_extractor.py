from fractions import Fraction

import pytest

from pathcert.extractor import (ExtractorParams, path_guarantee,
                                path_or_empty_bipartite, split_small_components)
from pathcert.graph import build_graph, empty_graph, friendship_graph, path_graph
from pathcert.rng import stream
from pathcert.witnesses import (BipartitePairWitness, InducedPathWitness, verify)

from conftest import seeded_connected_graph


def spider():
    # x = 0 with two legs of length 2 hanging off its neighbors
    return build_graph(7, [(0, 1), (0, 2), (1, 3), (3, 4), (2, 5), (5, 6)])


def bridged_triangles():
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])


def test_single_vertex_path():
    w = path_or_empty_bipartite(empty_graph(1), 0, ExtractorParams(1, 1))
    assert w == InducedPathWitness((0,))
    assert path_guarantee(1, ExtractorParams(1, 1)) == 1


def test_base_case_two_vertex_path():
    # 3T + D = 7 >= n = 6: the start and its smallest neighbor
    g = bridged_triangles()
    w = path_or_empty_bipartite(g, 0, ExtractorParams(1, 4))
    assert w == InducedPathWitness((0, 1))
    assert len(w) >= path_guarantee(6, ExtractorParams(1, 4))


def test_degree_precondition_names_offender():
    with pytest.raises(ValueError, match="vertex 2"):
        path_or_empty_bipartite(bridged_triangles(), 0, ExtractorParams(1, 3))
    with pytest.raises(ValueError, match="vertex 0"):
        path_or_empty_bipartite(friendship_graph(3), 1, ExtractorParams(1, 3))


def test_disconnected_rejected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="disconnected"):
        path_or_empty_bipartite(g, 0, ExtractorParams(1, 2))


def test_middle_case_spider_pair():
    trace: list = []
    w = path_or_empty_bipartite(spider(), 0, ExtractorParams(1, 3), trace=trace)
    assert w == BipartitePairWitness("empty", frozenset({3, 4}), frozenset({5, 6}))
    assert trace[0]["case"] == "middle-split"


def test_grow_case_path_graph():
    trace: list = []
    w = path_or_empty_bipartite(path_graph(7), 0, ExtractorParams(1, 3), trace=trace)
    assert w == InducedPathWitness((0, 1, 2))
    assert [t["case"] for t in trace] == ["grow", "base"]
    assert len(w) >= path_guarantee(7, ExtractorParams(1, 3))


def test_small_split_case():
    # hub 0 over seven pendant edges; deleting N[0] leaves seven isolated
    # leaves, each smaller than T, so they are packed greedily
    edges = [(0, i) for i in range(1, 8)] + [(i, i + 7) for i in range(1, 8)]
    g = build_graph(15, edges)
    trace: list = []
    w = path_or_empty_bipartite(g, 0, ExtractorParams(2, 8), trace=trace)
    assert trace[0]["case"] == "small-split"
    assert w == BipartitePairWitness("empty", frozenset({8, 9}),
                                     frozenset({10, 11, 12, 13, 14}))


def test_split_small_components_examples():
    comps = [frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})]
    a, b = split_small_components(comps, 2)
    assert a == frozenset({0, 1}) and b == frozenset({2, 3, 4, 5})
    a, b = split_small_components([frozenset({0}), frozenset({1}), frozenset({2})], 1)
    assert a == frozenset({0}) and b == frozenset({1, 2})
    with pytest.raises(ValueError, match="cannot split"):
        split_small_components([frozenset({0, 1, 2})], 2)


def test_split_respects_given_order_and_bounds():
    comps = [frozenset({6, 7}), frozenset({0, 1}), frozenset({2}), frozenset({3}),
             frozenset({4, 8}), frozenset({5, 9, 10})]
    a, b = split_small_components(comps, 3)
    assert a == frozenset({6, 7, 0, 1})
    assert b == frozenset({2, 3, 4, 8, 5, 9, 10})
    assert len(a) < 2 * 3 and len(b) >= 3


def _witness_is_sound(g, x, params, w):
    assert verify(g, w)
    if isinstance(w, InducedPathWitness):
        assert w.start == x
        assert len(w) >= path_guarantee(g.n, params)
    else:
        assert w.kind == "empty"
        assert min(w.side_sizes) >= params.T


def test_dichotomy_fuzz_totality():
    rng = stream(0xD1C0)
    for trial in range(150):
        g = seeded_connected_graph(trial, max_n=48)
        dmax = max(g.closed_degree(v) for v in range(g.n))
        params = ExtractorParams(T=1 + trial % 5, D=dmax + rng.below(3))
        x = rng.below(g.n)
        w = path_or_empty_bipartite(g, x, params)
        _witness_is_sound(g, x, params, w)


def test_determinism():
    g = seeded_connected_graph(99, max_n=40)
    params = ExtractorParams(2, max(g.closed_degree(v) for v in range(g.n)))
    assert (path_or_empty_bipartite(g, 0, params)
            == path_or_empty_bipartite(g, 0, params))


def test_pair_sides_avoid_start_neighborhood():
    # when no recursion happened, both sides live outside N[x]
    for trial in range(60):
        g = seeded_connected_graph(1000 + trial, max_n=30)
        dmax = max(g.closed_degree(v) for v in range(g.n))
        trace: list = []
        w = path_or_empty_bipartite(g, 0, ExtractorParams(3, dmax), trace=trace)
        if isinstance(w, BipartitePairWitness) and len(trace) == 1:
            closed = {0} | {v for v in range(g.n) if g.has_edge(0, v)}
            assert not ((w.X | w.Y) & closed)


def test_rational_threshold_instantiation():
    # T = ceil(c n), D = ceil(eps n) specializes the guarantee to 1/(2(eps+c))
    g = seeded_connected_graph(7, max_n=40)
    n = g.n
    c = Fraction(1, 10)
    dmax = max(g.closed_degree(v) for v in range(g.n))
    eps = max(Fraction(dmax, n), Fraction(1, 10))
    params = ExtractorParams(T=-(-c.numerator * n // c.denominator),
                             D=-(-eps.numerator * n // eps.denominator))
    w = path_or_empty_bipartite(g, 0, params)
    _witness_is_sound(g, 0, params, w)
