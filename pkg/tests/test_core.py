from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcfree.core import (
    LinkGraph,
    induced,
    is_independent,
    link_graph,
    maximum_matching,
    min_strong_degree,
    new_hypergraph,
    strong_degree,
)
from lcfree.errors import DegenerateEdge, VertexOutOfRange
from lcfree.generators import tight_two_exceptions
from lcfree.oracle import brute_matching

from conftest import graphs, hypergraphs


def test_new_hypergraph_k53(k53):
    assert k53.n == 5
    assert k53.m == 10


def test_new_hypergraph_edgeless(edgeless):
    assert edgeless.n == 3 and edgeless.edges == ()


def test_new_hypergraph_dedups_permutations():
    h = new_hypergraph(4, [(0, 1, 2), (2, 1, 0)])
    assert h.edges == ((0, 1, 2),)


@pytest.mark.parametrize(
    "triples, exc",
    [
        ([(0, 1, 5)], VertexOutOfRange),
        ([(0, 1, -1)], VertexOutOfRange),
        ([(0, 0, 1)], DegenerateEdge),
        ([(0, 1)], DegenerateEdge),
    ],
)
def test_new_hypergraph_rejects(triples, exc):
    with pytest.raises(exc):
        new_hypergraph(4, triples)


def test_induced_examples(k53, e2):
    sub, mapping = induced(k53, {0, 1, 2, 3})
    assert sub.m == 4 and mapping == (0, 1, 2, 3)
    assert induced(k53, {0, 1})[0].m == 0
    sub, mapping = induced(e2, {0, 1, 2})
    assert sub.edges == ((0, 1, 2),)


def test_induced_relabels():
    h = new_hypergraph(6, [(1, 3, 5), (0, 1, 2)])
    sub, mapping = induced(h, {5, 3, 1})
    assert mapping == (1, 3, 5)
    assert sub.edges == ((0, 1, 2),)


def test_is_independent_examples(k53, e2):
    assert all(is_independent(k53, p) for p in combinations(range(5), 2))
    assert not is_independent(k53, {0, 1, 2})
    # E2 edges are 012, 123, 234; none lies inside {0, 1, 3}
    assert is_independent(e2, {0, 1, 3})


def test_link_graph_examples(k53, e2, edgeless):
    lk = link_graph(k53, 0)
    assert lk.pairs == frozenset(combinations(range(1, 5), 2))
    assert link_graph(e2, 4).pairs == {(2, 3)}
    assert link_graph(edgeless, 0).pairs == frozenset()
    with pytest.raises(VertexOutOfRange):
        link_graph(e2, 9)


def test_maximum_matching_examples(k53):
    assert len(maximum_matching(link_graph(k53, 0))) == 2
    assert len(maximum_matching(LinkGraph(4, 0, frozenset()))) == 0
    assert len(maximum_matching(LinkGraph(4, 0, frozenset({(2, 3)})))) == 1


def test_maximum_matching_odd_cycle_blossom():
    # 5-cycle with a pendant path: greedy can stall, blossom shrinking must not
    pairs = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (4, 5), (5, 6)}
    g = LinkGraph(7, -1, frozenset(pairs))
    assert len(maximum_matching(g)) == 3 == brute_matching(g)


@given(graphs())
def test_maximum_matching_agrees_with_brute_force(g):
    m = maximum_matching(g)
    assert len(m) == brute_matching(g)
    touched = [v for p in m.pairs for v in p]
    assert len(touched) == len(set(touched))
    assert all(p in g.pairs or p[::-1] in g.pairs for p in m.pairs)


def test_strong_degree_k53(k53):
    assert [strong_degree(k53, v) for v in range(5)] == [2] * 5


def test_strong_degree_tight_example():
    h = tight_two_exceptions(5)
    assert [strong_degree(h, i) for i in range(5)] == [3] * 5
    # The link of each extra vertex is a star centred at the other one,
    # so its maximum matching has a single pair (brute force agrees).
    assert strong_degree(h, 5) == strong_degree(h, 6) == 1
    assert brute_matching(link_graph(h, 5)) == 1


def test_min_strong_degree_examples(edgeless):
    h = tight_two_exceptions(5)
    assert min_strong_degree(h, 2) == (3, (5, 6))
    assert min_strong_degree(h, 0) == (1, ())
    assert min_strong_degree(edgeless, 0) == (0, ())


def test_min_strong_degree_rejects_bad_exceptions(edgeless):
    with pytest.raises(ValueError):
        min_strong_degree(edgeless, 3)


@given(hypergraphs(max_n=8))
def test_strong_degree_bounds(h):
    for v in range(h.n):
        d = strong_degree(h, v)
        assert d <= h.degree(v)
        assert (d == 0) == (h.degree(v) == 0)


@given(hypergraphs(max_n=8), st.data())
def test_induced_commutes_with_independence(h, data):
    keep = data.draw(st.sets(st.integers(0, h.n - 1)))
    s = data.draw(st.sets(st.sampled_from(sorted(keep)))) if keep else set()
    sub, mapping = induced(h, keep)
    index = {v: i for i, v in enumerate(mapping)}
    assert is_independent(h, s) == is_independent(sub, {index[v] for v in s})
