"""Brute-force ground truth used to cross-check the main algorithms.

Nothing here shares code paths with the search routines it checks.
"""

from __future__ import annotations

from itertools import combinations

from lcfree.core import Hypergraph, LinkGraph
from lcfree.errors import CapExceeded

ALPHA_CAP = 24
CHI_CAP = 16
MATCHING_CAP = 14
K53_CAP = 40


def _components(h: Hypergraph) -> list[list[int]]:
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c in h.edges:
        for u in (b, c):
            ra, ru = find(a), find(u)
            if ra != ru:
                parent[max(ra, ru)] = min(ra, ru)
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def exact_alpha(h: Hypergraph, cap: int = ALPHA_CAP) -> tuple[int, frozenset[int]]:
    """Independence number with the lexicographically smallest maximum witness.

    Include/exclude over vertices in index order, per connected component,
    on bitmasks. Including a vertex bans every vertex that would complete an
    edge with two chosen ones.
    """
    if h.n > cap:
        raise CapExceeded(f"exact_alpha: n={h.n} exceeds cap {cap}")
    witness: set[int] = set()
    for comp in _components(h):
        witness |= _alpha_component(h, comp)
    return len(witness), frozenset(witness)


def _alpha_component(h: Hypergraph, comp: list[int]) -> set[int]:
    k = len(comp)
    pos = {v: i for i, v in enumerate(comp)}
    # pair_ban[i][j]: vertices that may not join once i and j are chosen
    third: dict[tuple[int, int], int] = {}
    for e in h.edges:
        if e[0] not in pos:
            continue
        a, b, c = (pos[v] for v in e)
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            key = (min(x, y), max(x, y))
            third[key] = third.get(key, 0) | (1 << z)

    best_mask = 0
    best_size = -1

    def rec(i: int, chosen: int, size: int, banned: int) -> None:
        nonlocal best_mask, best_size
        remaining = sum(1 for j in range(i, k) if not banned >> j & 1)
        if size + remaining <= best_size:
            return
        if i == k:
            best_mask, best_size = chosen, size
            return
        if not banned >> i & 1:
            extra = 0
            c = chosen
            while c:
                j = (c & -c).bit_length() - 1
                extra |= third.get((j, i), 0)
                c &= c - 1
            rec(i + 1, chosen | 1 << i, size + 1, banned | extra)
        rec(i + 1, chosen, size, banned)

    rec(0, 0, 0, 0)
    return {comp[i] for i in range(k) if best_mask >> i & 1}


def exact_chi(h: Hypergraph, cap: int = CHI_CAP) -> tuple[int, dict[int, int]]:
    """Chromatic number (colors 1..k) by trying k = 1, 2, ... with backtracking."""
    if h.n > cap:
        raise CapExceeded(f"exact_chi: n={h.n} exceeds cap {cap}")
    if h.n == 0:
        return 0, {}
    # edges checked once their largest vertex is colored
    closing: list[list[tuple[int, int]]] = [[] for _ in range(h.n)]
    for a, b, c in h.edges:
        closing[c].append((a, b))

    for k in range(1, h.n + 1):
        color = [0] * h.n

        def rec(v: int, used: int) -> bool:
            if v == h.n:
                return True
            for col in range(1, min(k, used + 1) + 1):
                if any(color[a] == col and color[b] == col for a, b in closing[v]):
                    continue
                color[v] = col
                if rec(v + 1, max(used, col)):
                    return True
            color[v] = 0
            return False

        if rec(0, 0):
            return k, {v: color[v] for v in range(h.n)}
    raise AssertionError("unreachable: n colors always suffice")


def brute_matching(g: LinkGraph, cap: int = MATCHING_CAP) -> int:
    """Largest set of pairwise disjoint pairs, by trying every subset."""
    pairs = sorted(g.pairs)
    if len(pairs) > cap:
        raise CapExceeded(f"brute_matching: {len(pairs)} pairs exceed cap {cap}")
    best = 0
    for mask in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        touched = [v for p in chosen for v in p]
        if len(touched) == len(set(touched)):
            best = max(best, len(chosen))
    return best


def _is_cycle_set(edges: tuple[tuple[int, int, int], ...]) -> bool:
    """Can these edges, in some cyclic order, form a linear cycle?"""
    k = len(edges)
    nbrs: list[list[int]] = [[] for _ in range(k)]
    joints: list[int] = []
    for i, j in combinations(range(k), 2):
        common = set(edges[i]) & set(edges[j])
        if len(common) > 1:
            return False
        if common:
            nbrs[i].append(j)
            nbrs[j].append(i)
            joints.append(common.pop())
    if any(len(x) != 2 for x in nbrs) or len(set(joints)) != k:
        return False
    # intersection graph must be one k-cycle, not several shorter ones
    seen = {0}
    stack = [0]
    while stack:
        for j in nbrs[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == k


def exhaustive_cycle_free(h: Hypergraph) -> bool:
    """True iff no set of 3 or more edges can be arranged as a linear cycle."""
    if not (h.m <= 14 or h.n <= 8):
        raise CapExceeded(f"exhaustive_cycle_free: n={h.n}, m={h.m} too large")
    edges = h.edges
    # a cycle of k edges uses 2k distinct vertices
    for k in range(3, min(h.m, h.n // 2) + 1):
        for subset in combinations(edges, k):
            if _is_cycle_set(subset):
                return False
    return True


def contains_k53(h: Hypergraph, cap: int = K53_CAP) -> frozenset[int] | None:
    """First 5-set (lexicographically) spanning all 10 triples, if any."""
    if h.n > cap:
        raise CapExceeded(f"contains_k53: n={h.n} exceeds cap {cap}")
    # each vertex of a K5^3 lies in 6 of its triples
    rich = [v for v in range(h.n) if h.degree(v) >= 6]
    for five in combinations(rich, 5):
        if all(t in h.edge_set for t in combinations(five, 3)):
            return frozenset(five)
    return None
