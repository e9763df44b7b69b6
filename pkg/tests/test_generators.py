from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcfree.core import min_strong_degree, strong_degree
from lcfree.cycles import find_linear_cycle
from lcfree.errors import CapExceeded
from lcfree.generators import (
    BadLength,
    KMustBeOdd,
    TooManyEdges,
    complete_k53,
    full_star,
    linear_cycle_gen,
    linear_path,
    random_cycle_free,
    random_hypergraph,
    tight_two_exceptions,
)
from lcfree.oracle import exact_alpha, exhaustive_cycle_free


def test_complete_k53():
    assert complete_k53(1).m == 10
    two = complete_k53(2)
    assert two.n == 10 and exact_alpha(two)[0] == 4
    assert complete_k53(3).m == 30


@pytest.mark.parametrize("n", range(3, 10))
def test_full_star_counts(n):
    h = full_star(n)
    assert h.m == comb(n - 1, 2)
    assert all(0 in e for e in h.edges)


def test_full_star_is_cycle_free():
    assert exhaustive_cycle_free(full_star(5))
    assert full_star(3).m == 1


@pytest.mark.parametrize("k", [5, 7])
def test_tight_two_exceptions(k):
    h = tight_two_exceptions(k)
    assert h.n == k + 2 and h.m == 2 * k
    assert exhaustive_cycle_free(h)
    assert all(strong_degree(h, i) == 3 for i in range(k))
    assert min_strong_degree(h, 2) == (3, (k, k + 1))


@pytest.mark.parametrize("k", [4, 3, 6])
def test_tight_rejects_bad_k(k):
    with pytest.raises(KMustBeOdd):
        tight_two_exceptions(k)


def test_paths_and_cycles():
    assert linear_path(2).edges == ((0, 1, 2), (2, 3, 4))
    assert linear_path(1).m == 1
    c3 = linear_cycle_gen(3)
    assert c3.edges == ((0, 1, 2), (0, 4, 5), (2, 3, 4))
    assert find_linear_cycle(c3) is not None
    with pytest.raises(BadLength):
        linear_cycle_gen(2)
    with pytest.raises(BadLength):
        linear_path(0)


def test_random_hypergraph():
    assert random_hypergraph(5, 10, 7) == complete_k53(1)
    assert random_hypergraph(6, 0, 7).m == 0
    assert random_hypergraph(8, 12, 3) == random_hypergraph(8, 12, 3)
    with pytest.raises(TooManyEdges):
        random_hypergraph(5, 11, 0)


def test_random_cycle_free_edge_cases():
    assert random_cycle_free(7, 0, 1).m == 0
    with pytest.raises(CapExceeded):
        random_cycle_free(13, 10, 0)


@given(st.integers(3, 8), st.integers(0, 60), st.integers(0, 2**64 - 1))
def test_random_cycle_free_is_deterministic_and_free(n, attempts, seed):
    h = random_cycle_free(n, attempts, seed)
    assert h == random_cycle_free(n, attempts, seed)
    assert exhaustive_cycle_free(h)
    if n >= 6:
        assert h.m <= comb(n - 1, 2)


def test_extremal_count_fails_below_six_vertices():
    # a linear cycle needs 6 vertices, so complete hypergraphs on 4 or 5 are cycle-free
    assert complete_k53(1).m == 10 > comb(4, 2)
    assert random_hypergraph(4, 4, 0).m == 4 > comb(3, 2)


def test_seed_stream_is_pinned():
    # MT19937 stream for seed 2024; changes here break archived corpora
    assert random_hypergraph(7, 4, 2024).edges == ((0, 3, 6), (0, 4, 5), (1, 3, 4), (2, 5, 6))
    assert random_cycle_free(6, 20, 0).edges == (
        (0, 2, 4), (0, 3, 5), (1, 2, 4), (1, 3, 5), (2, 3, 4), (2, 3, 5), (3, 4, 5),
    )
