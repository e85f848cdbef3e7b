from fractions import Fraction

import pytest

from pathcert.generators import (BudgetExhaustedError, GeneratorSpec, generate,
                                 gnp, random_cograph, rejection_sample_ck)
from pathcert.graph import complete_graph, empty_graph, path_graph
from pathcert.patterns import contains_induced, is_pk_copk_free
from pathcert.rng import SplitMix64, stream

from conftest import brute_has_induced_p4


def test_gnp_extremes():
    assert gnp(9, Fraction(0), stream(1)) == empty_graph(9)
    assert gnp(9, Fraction(1), stream(1)) == complete_graph(9)


def test_gnp_seed_determinism():
    a = generate(GeneratorSpec("gnp", 25, p=Fraction(1, 2), seed=42))
    b = generate(GeneratorSpec("gnp", 25, p=Fraction(1, 2), seed=42))
    assert a == b
    c = generate(GeneratorSpec("gnp", 25, p=Fraction(1, 2), seed=43))
    assert a != c


def test_gnp_index_gives_distinct_streams():
    spec = GeneratorSpec("gnp", 20, p=Fraction(1, 2), seed=7)
    assert generate(spec, index=0) != generate(spec, index=1)


def test_cograph_is_p4_free():
    for seed in range(30):
        g = random_cograph(2 + stream(0xF0, seed).below(19), stream(0xF1, seed))
        assert not contains_induced(g, path_graph(4)).found
        assert not brute_has_induced_p4(g)


def test_balanced_cograph_shape():
    g = random_cograph(16, stream(5), balanced=True)
    assert g.n == 16
    assert not brute_has_induced_p4(g)


def test_named_families():
    assert generate(GeneratorSpec("path", 5)) == path_graph(5)
    assert generate(GeneratorSpec("complete", 4)) == complete_graph(4)
    g = generate(GeneratorSpec("complete-bipartite", 7))
    assert g.n == 7 and g.edge_count() == 3 * 4
    g = generate(GeneratorSpec("friendship", 7))
    assert g.degree(0) == 6
    with pytest.raises(ValueError):
        generate(GeneratorSpec("friendship", 6))


def test_spec_validation():
    with pytest.raises(ValueError):
        GeneratorSpec("nonsense", 5)
    with pytest.raises(ValueError):
        GeneratorSpec("gnp", 0)
    with pytest.raises(ValueError):
        GeneratorSpec("gnp", 5, p=Fraction(3, 2))
    with pytest.raises(ValueError):
        generate(GeneratorSpec("gnp", 5))  # missing p


def test_rejection_sampling_certifies():
    for i in range(10):
        sample = rejection_sample_ck(8, 4, Fraction(1, 2), seed=i, budget=50000)
        assert is_pk_copk_free(sample.graph, 4) is None
        assert not brute_has_induced_p4(sample.graph)
        assert sample.draws >= 1


def test_rejection_sampling_reproducible():
    a = rejection_sample_ck(10, 5, Fraction(1, 2), seed=3, budget=50000)
    b = rejection_sample_ck(10, 5, Fraction(1, 2), seed=3, budget=50000)
    assert a.graph == b.graph and a.draws == b.draws


def test_rejection_budget_zero_fails():
    with pytest.raises(BudgetExhaustedError) as err:
        rejection_sample_ck(8, 5, Fraction(1, 2), seed=0, budget=0)
    assert err.value.draws == 0


def test_rejection_guard_large_n():
    with pytest.raises(ValueError):
        rejection_sample_ck(41, 5, Fraction(1, 2), seed=0, budget=10)


def test_splitmix_reference_vector():
    # SplitMix64 with seed 0: first outputs of the reference implementation
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_below_exact_and_in_range():
    rng = stream(11)
    draws = [rng.below(10) for _ in range(1000)]
    assert all(0 <= d < 10 for d in draws)
    assert set(draws) == set(range(10))


def test_bernoulli_exactness():
    rng = stream(12)
    assert not any(rng.bernoulli(0, 7) for _ in range(100))
    assert all(rng.bernoulli(7, 7) for _ in range(100))
