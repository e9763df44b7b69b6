"""Hypergraph data model, link graphs and strong degree.

Vertices are the dense integers ``0..n-1`` and every edge is stored as a
sorted triple, so iteration order is deterministic everywhere.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from lcfree.errors import DegenerateEdge, VertexOutOfRange

Edge = tuple[int, int, int]
Pair = tuple[int, int]


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise VertexOutOfRange(f"vertex {v} not in [0, {n})")


@dataclass(frozen=True)
class Hypergraph:
    """Immutable 3-uniform hypergraph on ``range(n)``.

    Build instances with :func:`new_hypergraph`, which validates and
    canonicalizes; the constructor trusts its arguments.
    """

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[Edge, ...], ...]:
        """``incidence[v]`` lists the edges containing ``v`` in sorted order."""
        inc: list[list[Edge]] = [[] for _ in range(self.n)]
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return tuple(tuple(lst) for lst in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"


def new_hypergraph(n: int, triples: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate, sort and deduplicate ``triples`` into a :class:`Hypergraph`."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    seen: set[Edge] = set()
    for t in triples:
        t = tuple(t)
        if len(t) != 3:
            raise DegenerateEdge(f"edge {t} does not have exactly 3 vertices")
        for v in t:
            _check_vertex(n, v)
        if len(set(t)) != 3:
            raise DegenerateEdge(f"edge {t} repeats a vertex")
        seen.add(tuple(sorted(t)))  # type: ignore[arg-type]
    return Hypergraph(n, tuple(sorted(seen)))


def induced(h: Hypergraph, keep: Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """Subhypergraph induced by ``keep``, relabeled to ``0..len(keep)-1``.

    Returns the new hypergraph and ``mapping`` with ``mapping[i]`` the
    original label of new vertex ``i``.
    """
    mapping = tuple(sorted(set(keep)))
    for v in mapping:
        _check_vertex(h.n, v)
    index = {v: i for i, v in enumerate(mapping)}
    edges = [
        tuple(index[v] for v in e) for e in h.edges if all(v in index for v in e)
    ]
    return Hypergraph(len(mapping), tuple(sorted(edges))), mapping  # type: ignore[arg-type]


def is_independent(h: Hypergraph, s: Iterable[int]) -> bool:
    s = set(s)
    if len(s) < 3:
        return True
    return not any(e[0] in s and e[1] in s and e[2] in s for e in h.edges)


@dataclass(frozen=True)
class LinkGraph:
    n: int
    center: int
    pairs: frozenset[Pair]


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[Pair]

    def __len__(self) -> int:
        return len(self.pairs)


def link_graph(h: Hypergraph, v: int) -> LinkGraph:
    _check_vertex(h.n, v)
    pairs = frozenset(
        tuple(u for u in e if u != v) for e in h.incidence[v]
    )
    return LinkGraph(h.n, v, pairs)  # type: ignore[arg-type]


def maximum_matching(g: LinkGraph) -> Matching:
    """Maximum cardinality matching of a general graph (Edmonds' blossoms).

    Each phase grows an alternating BFS forest from one exposed vertex and
    shrinks odd cycles by relabeling their vertices with a common base.
    """
    verts = sorted({u for p in g.pairs for u in p})
    if not verts:
        return Matching(frozenset())
    idx = {u: i for i, u in enumerate(verts)}
    k = len(verts)
    adj: list[list[int]] = [[] for _ in range(k)]
    for a, b in sorted(g.pairs):
        adj[idx[a]].append(idx[b])
        adj[idx[b]].append(idx[a])

    mate = [-1] * k
    # Greedy start; augmenting phases fix whatever it gets wrong.
    for u in range(k):
        if mate[u] == -1:
            for w in adj[u]:
                if mate[w] == -1:
                    mate[u], mate[w] = w, u
                    break

    def find_augmenting(root: int) -> int:
        parent = [-1] * k
        base = list(range(k))
        in_tree = [False] * k
        in_tree[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * k
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * k
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(k):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # augment along the alternating path ending at `to`
                        w = to
                        while w != -1:
                            pw = parent[w]
                            nxt = mate[pw]
                            mate[w], mate[pw] = pw, w
                            w = nxt
                        return to
                    in_tree[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for u in range(k):
        if mate[u] == -1:
            find_augmenting(u)

    pairs = frozenset(
        (verts[u], verts[mate[u]]) for u in range(k) if mate[u] > u
    )
    return Matching(pairs)


def strong_degree(h: Hypergraph, v: int) -> int:
    """Size of a maximum matching in the link of ``v``."""
    return len(maximum_matching(link_graph(h, v)))


def min_strong_degree(h: Hypergraph, exceptions: int = 0) -> tuple[int, tuple[int, ...]]:
    """Largest ``d`` with ``strong_degree >= d`` at all but ``exceptions`` vertices.

    The excluded vertices are the ``exceptions`` smallest by (strong degree,
    index). When nothing is left after the exclusion the value is 0.
    """
    if exceptions not in (0, 1, 2):
        raise ValueError("exceptions must be 0, 1 or 2")
    ranked = sorted((strong_degree(h, v), v) for v in range(h.n))
    witnesses = tuple(sorted(v for _, v in ranked[:exceptions]))
    rest = ranked[exceptions:]
    if not rest:
        return 0, witnesses
    return rest[0][0], witnesses
