from __future__ import annotations

import os
from itertools import combinations

import hypothesis
import pytest
from hypothesis import strategies as st

from lcfree.core import Hypergraph, LinkGraph, new_hypergraph
from lcfree.generators import complete_k53

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@st.composite
def hypergraphs(draw, min_n: int = 3, max_n: int = 7, max_m: int | None = None) -> Hypergraph:
    n = draw(st.integers(min_n, max_n))
    triples = list(combinations(range(n), 3))
    cap = len(triples) if max_m is None else min(max_m, len(triples))
    chosen = draw(st.lists(st.sampled_from(triples), max_size=cap, unique=True)) if triples else []
    return new_hypergraph(n, chosen)


@st.composite
def graphs(draw, max_n: int = 8, max_pairs: int = 12) -> LinkGraph:
    n = draw(st.integers(2, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=max_pairs, unique=True))
    return LinkGraph(n, -1, frozenset(chosen))


@st.composite
def mixed_edge_lists(draw, max_edges: int = 7) -> list[tuple[int, ...]]:
    """Edges of a random mixed tree in build order, on fresh integer labels."""
    size = draw(st.sampled_from([2, 3]))
    edges = [tuple(range(size))]
    nxt = size
    for _ in range(draw(st.integers(0, max_edges - 1))):
        verts = sorted({v for e in edges for v in e})
        at = draw(st.sampled_from(verts))
        size = draw(st.sampled_from([2, 3]))
        edges.append((at, *range(nxt, nxt + size - 1)))
        nxt += size - 1
    return edges


@pytest.fixture
def k53() -> Hypergraph:
    return complete_k53(1)


@pytest.fixture
def e2() -> Hypergraph:
    """Edges abc, bcd, cde on 5 vertices."""
    return new_hypergraph(5, [(0, 1, 2), (1, 2, 3), (2, 3, 4)])


@pytest.fixture
def edgeless() -> Hypergraph:
    return new_hypergraph(3, [])
