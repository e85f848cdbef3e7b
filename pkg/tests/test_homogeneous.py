from fractions import Fraction

import pytest

from pathcert.graph import build_graph, complete_graph, cycle_graph, empty_graph
from pathcert.generators import gnp
from pathcert.homogeneous import (find_epsilon_homogeneous, fox_sudakov_delta,
                                  prune_high_degree)
from pathcert.rng import stream
from pathcert.witnesses import verify_homogeneous

from pathcert.graph import mask_of

from conftest import best_homogeneous_sizes, planted_sparse_graph


def test_exact_empty_graph_full_stable():
    w = find_epsilon_homogeneous(empty_graph(10), Fraction(0), 10, "exact")
    assert w.kind == "stable" and w.size == 10
    assert verify_homogeneous(empty_graph(10), w)


def test_exact_complete_graph_full_clique():
    w = find_epsilon_homogeneous(complete_graph(10), Fraction(0), 10, "exact")
    assert w.kind == "clique" and w.size == 10


def test_exact_c5_stable_pair():
    w = find_epsilon_homogeneous(cycle_graph(5), Fraction(0), 2, "exact")
    assert w.kind == "stable" and w.S == frozenset({0, 2})


def test_exact_is_complete_against_enumeration():
    for seed in range(12):
        g = gnp(8, Fraction(seed % 5 + 1, 6), stream(0x5151, seed))
        for eps in (Fraction(0), Fraction(1, 4), Fraction(1, 2)):
            best_stable, best_clique = best_homogeneous_sizes(g, eps)
            best = max(best_stable, best_clique)
            w = find_epsilon_homogeneous(g, eps, best, "exact")
            assert w is not None and w.size >= best
            assert verify_homogeneous(g, w)
            if best < g.n:
                assert find_epsilon_homogeneous(g, eps, best + 1, "exact") is None


def test_exact_guard():
    with pytest.raises(ValueError):
        find_epsilon_homogeneous(empty_graph(21), Fraction(0), 1, "exact")


def test_greedy_meets_target_or_none_and_verifies():
    for seed in range(40):
        g = gnp(30, Fraction(1, 3), stream(0x5252, seed))
        w = find_epsilon_homogeneous(g, Fraction(1, 10), 2, "greedy-peel")
        if w is not None:
            assert w.size >= 2
            assert verify_homogeneous(g, w)


def test_greedy_peel_is_deterministic():
    g = gnp(25, Fraction(1, 2), stream(0x5353))
    a = find_epsilon_homogeneous(g, Fraction(1, 8), 1, "greedy")
    b = find_epsilon_homogeneous(g, Fraction(1, 8), 1, "greedy-peel")
    assert a == b


def test_trivial_strategy():
    g = cycle_graph(5)
    w = find_epsilon_homogeneous(g, Fraction(0), 1, "trivial")
    assert w.kind == "stable" and w.S == frozenset({0})
    assert find_epsilon_homogeneous(g, Fraction(0), 2, "trivial") is None


def test_find_epsilon_validates_inputs():
    with pytest.raises(ValueError):
        find_epsilon_homogeneous(cycle_graph(5), Fraction(3, 2), 1, "exact")
    with pytest.raises(ValueError):
        find_epsilon_homogeneous(cycle_graph(5), Fraction(0), 6, "exact")
    with pytest.raises(ValueError):
        find_epsilon_homogeneous(cycle_graph(5), Fraction(0), 1, "magic")


def triangle_plus_isolated():
    return build_graph(10, [(0, 1), (0, 2), (1, 2)])


def test_prune_triangle_plus_isolated_unchanged():
    # threshold 2 * (1/10) * 10 = 2, all degrees <= 2
    g = triangle_plus_isolated()
    out = prune_high_degree(g, range(10), Fraction(1, 10))
    assert out == frozenset(range(10))


def test_prune_star_removes_center():
    g = build_graph(10, [(0, v) for v in range(1, 10)])
    out = prune_high_degree(g, range(10), Fraction(1, 10))
    assert out == frozenset(range(1, 10))


def test_prune_epsilon_half_no_op():
    g = complete_graph(8)
    out = prune_high_degree(g, range(8), Fraction(1, 2))
    assert out == frozenset(range(8))


def test_prune_half_guarantee_on_planted_sparse_sets():
    rng = stream(0x6060)
    for trial in range(120):
        eps = Fraction(1, 10) if trial % 2 == 0 else Fraction(1, 30)
        s = rng.randint(2, 120)
        g = planted_sparse_graph(s, eps, rng)
        out = prune_high_degree(g, range(s), eps)
        assert len(out) >= -(-s // 2)
        bound = 2 * eps * s
        mask = mask_of(out)
        for v in out:
            assert (g.adj[v] & mask).bit_count() <= bound


def test_fox_sudakov_values():
    assert fox_sudakov_delta(5, Fraction(1, 2)).exponent == -75
    assert fox_sudakov_delta(1, Fraction(1, 2)).exponent == -15
    d = fox_sudakov_delta(7, Fraction(1))
    assert d.exponent == 0 and d.delta == 1


def test_fox_sudakov_monotone():
    for eps in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 3)):
        values = [fox_sudakov_delta(k, eps).exponent_float for k in range(1, 6)]
        assert all(a > b for a, b in zip(values, values[1:]))
    # shrinking epsilon never increases delta
    k = 4
    eps_chain = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 8)]
    exps = [fox_sudakov_delta(k, e).exponent_float for e in eps_chain]
    assert all(a >= b for a, b in zip(exps, exps[1:]))


def test_fox_sudakov_rejects_zero_epsilon():
    with pytest.raises(ValueError):
        fox_sudakov_delta(3, Fraction(0))


def test_fox_sudakov_symbolic_description():
    d = fox_sudakov_delta(5, Fraction(1, 30))
    assert not d.exact
    assert "log2(30)" in d.describe()
