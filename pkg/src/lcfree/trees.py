"""Linear and mixed trees, skeletons, swaps and forest endings.

A mixed tree keeps its edges in a build order: every edge after the first
meets the union of the earlier ones in exactly one vertex, recorded in
``attach``. Linear trees are mixed trees whose edges all have 3 vertices.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from lcfree.core import Hypergraph
from lcfree.errors import (
    NotAnOppositePair,
    SearchBudgetExceeded,
    SeedNotInActive,
    VertexNotInTree,
)

TEdge = tuple[int, ...]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class MixedTree:
    edges: tuple[TEdge, ...]
    attach: tuple[int | None, ...]

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]]) -> MixedTree:
        """Keep the given order; ``attach`` is None where the build rule fails."""
        es = tuple(tuple(sorted(e)) for e in edges)
        attach: list[int | None] = [None]
        seen = set(es[0]) if es else set()
        for e in es[1:]:
            common = seen.intersection(e)
            attach.append(common.pop() if len(common) == 1 else None)
            seen.update(e)
        return cls(es, tuple(attach[: len(es)]))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def is_linear(self) -> bool:
        return all(len(e) == 3 for e in self.edges)


@dataclass(frozen=True)
class MixedForest:
    trees: tuple[MixedTree, ...] = ()
    isolated: frozenset[int] = frozenset()

    @property
    def vertices(self) -> frozenset[int]:
        out = set(self.isolated)
        for t in self.trees:
            out |= t.vertices
        return frozenset(out)

    @property
    def edge_count(self) -> int:
        return sum(len(t.edges) for t in self.trees)


def validate_tree(t: MixedTree, h: Hypergraph | None = None) -> bool:
    """Check the build invariant, and membership of 3-edges in ``h`` if given."""
    if not t.edges or len(t.attach) != len(t.edges) or t.attach[0] is not None:
        return False
    seen: set[int] = set()
    for i, e in enumerate(t.edges):
        if len(e) not in (2, 3) or len(set(e)) != len(e):
            return False
        if h is not None and len(e) == 3 and tuple(sorted(e)) not in h.edge_set:
            return False
        if i:
            common = seen.intersection(e)
            if len(common) != 1 or t.attach[i] not in common:
                return False
        seen.update(e)
    return True


def _order_edges(edges: Iterable[TEdge]) -> MixedTree:
    """Rebuild a valid build order: smallest edge first, then the smallest attachable one."""
    pool = sorted(set(tuple(sorted(e)) for e in edges))
    order = [pool.pop(0)]
    attach: list[int | None] = [None]
    seen = set(order[0])
    while pool:
        for i, e in enumerate(pool):
            common = seen.intersection(e)
            if len(common) == 1:
                break
        else:
            raise ValueError("edges do not form a single mixed tree")
        pool.pop(i)
        order.append(e)
        attach.append(common.pop())
        seen.update(e)
    return MixedTree(tuple(order), tuple(attach))


def grow_skeleton(h: Hypergraph, active: Iterable[int], seed: Sequence[int]) -> MixedTree:
    """Greedily extend ``seed`` until no active edge meets the tree in one vertex."""
    active = frozenset(active)
    seed = tuple(sorted(seed))
    if seed not in h.edge_set or not active.issuperset(seed):
        raise SeedNotInActive(f"seed {seed} is not an edge inside the active set")
    pool = [e for e in h.edges if active.issuperset(e)]
    edges = [seed]
    attach: list[int | None] = [None]
    verts = set(seed)
    while True:
        for e in pool:
            common = verts.intersection(e)
            if len(common) == 1:
                break
        else:
            return MixedTree(tuple(edges), tuple(attach))
        edges.append(e)
        attach.append(common.pop())
        verts.update(e)


def maximum_skeleton(
    h: Hypergraph, active: Iterable[int], budget: int = DEFAULT_BUDGET
) -> MixedTree | None:
    """Linear tree with the most vertices inside ``active``, by exhaustive search.

    Every tree is enumerated once, rooted at its smallest edge, by branching
    include/exclude on the smallest attachable edge. A reachability bound
    prunes branches that cannot reach the incumbent size. Ties go to the
    lexicographically smallest vertex set, then edge list.
    """
    active = frozenset(active)
    pool = [e for e in h.edges if active.issuperset(e)]
    if not pool:
        return None
    inc: dict[int, list[TEdge]] = {}
    for e in pool:
        for v in e:
            inc.setdefault(v, []).append(e)

    best_key: tuple | None = None
    best_edges: tuple[TEdge, ...] = ()
    nodes = 0

    def reach_bound(verts: set[int], root: TEdge, banned: set[TEdge]) -> int:
        seen = set(verts)
        queue = deque(verts)
        while queue:
            v = queue.popleft()
            for e in inc[v]:
                if e <= root or e in banned:
                    continue
                for u in e:
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
        extra = len(seen) - len(verts)
        return len(verts) + 2 * (extra // 2)

    def consider(edges: list[TEdge], verts: set[int]) -> None:
        nonlocal best_key, best_edges
        key = (-len(verts), tuple(sorted(verts)), tuple(sorted(edges)))
        if best_key is None or key < best_key:
            best_key, best_edges = key, tuple(edges)

    def search(root: TEdge, edges: list[TEdge], verts: set[int], banned: set[TEdge]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"maximum_skeleton exceeded {budget} nodes")
        if best_key is not None and reach_bound(verts, root, banned) < -best_key[0]:
            return
        cand = None
        for v in sorted(verts):
            for e in inc[v]:
                if e <= root or e in banned or e in edges:
                    continue
                if len(verts.intersection(e)) == 1 and (cand is None or e < cand):
                    cand = e
        if cand is None:
            consider(edges, verts)
            return
        new = [u for u in cand if u not in verts]
        edges.append(cand)
        verts.update(new)
        search(root, edges, verts, banned)
        edges.pop()
        verts.difference_update(new)
        banned.add(cand)
        search(root, edges, verts, banned)
        banned.discard(cand)

    everything = tuple(sorted(active))
    for root in pool:
        search(root, [root], set(root), set())
        # later roots give larger sorted edge lists, so a spanning tree is final
        if best_key is not None and best_key[1] == everything:
            break
    return _order_edges(best_edges)


def star_at(t: MixedTree, v: int) -> tuple[TEdge, ...]:
    if v not in t.vertices:
        raise VertexNotInTree(f"vertex {v} is not in the tree")
    return tuple(e for e in t.edges if v in e)


def tree_distances(t: MixedTree, v: int) -> dict[int, int]:
    """BFS distances from ``v`` in the pair-expansion graph of ``t``."""
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for e in t.edges:
            if u in e:
                for w in e:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
    return dist


def opposite_pair(t: MixedTree, v: int, e: Sequence[int]) -> tuple[int, int]:
    """The unique pair of ``e`` whose ends are equidistant from ``v``."""
    if v not in t.vertices:
        raise VertexNotInTree(f"vertex {v} is not in the tree")
    dist = tree_distances(t, v)
    a, b, c = sorted(e)
    pairs = [p for p in ((a, b), (a, c), (b, c)) if dist[p[0]] == dist[p[1]]]
    if len(pairs) != 1:
        raise ValueError(f"edge {e} has {len(pairs)} pairs opposite to {v}")
    return pairs[0]


def swap(
    t: MixedTree, f: Sequence[int], v: int, h: Hypergraph | None = None
) -> MixedTree:
    """Replace the tree edge holding the pair ``f - {v}`` by ``f``.

    Requires that pair to avoid the star at ``v`` and to be the pair of
    its tree edge opposite to ``v``.
    """
    f = tuple(sorted(f))
    if h is not None and f not in h.edge_set:
        raise NotAnOppositePair(f"{f} is not an edge of the hypergraph")
    if v not in f:
        raise NotAnOppositePair(f"{v} is not a vertex of {f}")
    pair = tuple(u for u in f if u != v)
    star_vertices = {u for e in star_at(t, v) for u in e}
    if star_vertices.intersection(pair):
        raise NotAnOppositePair(f"pair {pair} meets the star at {v}")
    holder = [e for e in t.edges if set(pair) <= set(e)]
    if len(holder) != 1 or len(holder[0]) != 3:
        raise NotAnOppositePair(f"pair {pair} lies in no tree edge")
    e = holder[0]
    if opposite_pair(t, v, e) != pair:
        raise NotAnOppositePair(f"pair {pair} is not opposite to {v} in {e}")
    return _order_edges([f if x == e else x for x in t.edges])


def is_skeleton(h: Hypergraph, t: MixedTree, active: Iterable[int] | None = None) -> bool:
    """No edge of ``h`` inside ``active`` meets ``t`` in exactly one vertex."""
    active = frozenset(range(h.n)) if active is None else frozenset(active)
    verts = t.vertices
    return not any(
        active.issuperset(e) and len(verts.intersection(e)) == 1 for e in h.edges
    )


def is_near_skeleton(h: Hypergraph, t: MixedTree, exceptional: int) -> bool:
    """Every edge meeting ``t`` in one vertex meets it at ``exceptional``."""
    verts = t.vertices
    if exceptional not in verts:
        return False
    for e in h.edges:
        common = verts.intersection(e)
        if len(common) == 1 and common != {exceptional}:
            return False
    return True


# ---------------------------------------------------------------- endings


@dataclass(frozen=True)
class PathEnding:
    """Pendant edge ``h`` hanging off ``g`` at ``joint``, which has degree 2."""

    g: TEdge
    h: TEdge
    joint: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.g) | frozenset(self.h)


@dataclass(frozen=True)
class StarEnding:
    center: int
    edges: tuple[TEdge, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


@dataclass(frozen=True)
class Degenerate:
    """The only edge of a one-edge tree."""

    edge: TEdge


@dataclass(frozen=True)
class IsolatedOnly:
    vertices: frozenset[int] = field(default_factory=frozenset)


Ending = PathEnding | StarEnding | Degenerate


def find_ending(f: MixedForest) -> Ending | IsolatedOnly:
    """Pick an ending of the forest.

    Order of preference: path-ending with a 3-vertex pendant edge, with a
    2-vertex pendant edge, a one-edge tree, a star-ending. Within a kind
    the smallest by (g, h), edge, or (center, edges) wins.
    """
    paths3: list[PathEnding] = []
    paths2: list[PathEnding] = []
    lone: list[Degenerate] = []
    stars: list[StarEnding] = []
    for t in f.trees:
        if len(t.edges) == 1:
            lone.append(Degenerate(t.edges[0]))
            continue
        deg: dict[int, int] = {}
        for e in t.edges:
            for v in e:
                deg[v] = deg.get(v, 0) + 1
        pendant_at: dict[int, list[TEdge]] = {}
        for e in t.edges:
            inner = [v for v in e if deg[v] > 1]
            if len(inner) != 1:
                continue
            b = inner[0]
            pendant_at.setdefault(b, []).append(e)
            if deg[b] == 2:
                (g,) = [x for x in t.edges if b in x and x != e]
                (paths3 if len(e) == 3 else paths2).append(PathEnding(g, e, b))
        for c, es in pendant_at.items():
            if len(es) >= 2:
                stars.append(StarEnding(c, tuple(sorted(es))))
    if paths3:
        return min(paths3, key=lambda p: (p.g, p.h))
    if paths2:
        return min(paths2, key=lambda p: (p.g, p.h))
    if lone:
        return min(lone, key=lambda d: d.edge)
    if stars:
        return min(stars, key=lambda s: (s.center, s.edges))
    return IsolatedOnly(f.vertices)


def delete_vertices(f: MixedForest, d: Iterable[int]) -> MixedForest:
    """Remove ``d``; edges shrink, edges under 2 vertices vanish, remains split."""
    d = frozenset(d)
    kept: list[TEdge] = []
    survivors: set[int] = set(f.isolated - d)
    for t in f.trees:
        for e in t.edges:
            rest = tuple(v for v in e if v not in d)
            survivors.update(rest)
            if len(rest) >= 2:
                kept.append(rest)

    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in kept:
        for v in e[1:]:
            ra, rb = find(e[0]), find(v)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[TEdge]] = {}
    for e in kept:
        groups.setdefault(find(e[0]), []).append(e)
    trees = tuple(sorted((_order_edges(es) for es in groups.values()), key=lambda t: t.edges))
    covered = {v for e in kept for v in e}
    return MixedForest(trees, frozenset(survivors - covered))
