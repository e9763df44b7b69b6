"""Instance families and seeded random corpora.

Randomness comes from :class:`random.Random` (MT19937) seeded with the
64-bit seed; ``randrange`` and ``sample`` give the same stream on every
platform for a given seed.
"""

from __future__ import annotations

import random
from itertools import combinations

from lcfree.core import Hypergraph, new_hypergraph
from lcfree.cycles import find_linear_cycle
from lcfree.errors import CapExceeded

RANDOM_FREE_CAP = 12


class KMustBeOdd(ValueError):
    pass


class BadLength(ValueError):
    pass


class TooManyEdges(ValueError):
    pass


def _rng(seed: int) -> random.Random:
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return random.Random(seed)


def complete_k53(copies: int = 1) -> Hypergraph:
    """Vertex-disjoint copies of the complete 3-uniform hypergraph on 5 vertices."""
    if copies < 1:
        raise ValueError("copies must be at least 1")
    edges = [
        tuple(5 * i + v for v in t)
        for i in range(copies)
        for t in combinations(range(5), 3)
    ]
    return new_hypergraph(5 * copies, edges)


def full_star(n: int) -> Hypergraph:
    """All C(n-1, 2) triples through vertex 0."""
    if n < 3:
        raise ValueError("full_star needs n >= 3")
    return new_hypergraph(n, [(0, a, b) for a, b in combinations(range(1, n), 2)])


def tight_two_exceptions(k: int) -> Hypergraph:
    """Cyclically consecutive triples of ``range(k)`` plus ``{k, k+1, i}`` for each i."""
    if k % 2 == 0 or k < 5:
        raise KMustBeOdd(f"k must be odd and at least 5, got {k}")
    edges = [(i, (i + 1) % k, (i + 2) % k) for i in range(k)]
    edges += [(k, k + 1, i) for i in range(k)]
    return new_hypergraph(k + 2, edges)


def linear_path(k: int) -> Hypergraph:
    if k < 1:
        raise BadLength("a linear path needs at least one edge")
    return new_hypergraph(2 * k + 1, [(2 * i, 2 * i + 1, 2 * i + 2) for i in range(k)])


def linear_cycle_gen(k: int) -> Hypergraph:
    if k < 3:
        raise BadLength("a linear cycle needs at least three edges")
    n = 2 * k
    return new_hypergraph(n, [(2 * i, 2 * i + 1, (2 * i + 2) % n) for i in range(k)])


def random_hypergraph(n: int, m: int, seed: int) -> Hypergraph:
    """``m`` distinct triples drawn uniformly from all C(n, 3)."""
    triples = list(combinations(range(n), 3))
    if m > len(triples):
        raise TooManyEdges(f"m={m} exceeds C({n},3)={len(triples)}")
    return new_hypergraph(n, _rng(seed).sample(triples, m))


def random_cycle_free(n: int, attempts: int, seed: int) -> Hypergraph:
    """Grow a linear-cycle-free hypergraph by proposing random triples.

    A proposal is kept iff no linear cycle passes through it. The result
    is deterministic per (n, attempts, seed) but not uniform over the class.
    """
    if n > RANDOM_FREE_CAP:
        raise CapExceeded(f"random_cycle_free: n={n} exceeds cap {RANDOM_FREE_CAP}")
    if n < 3:
        return new_hypergraph(max(n, 0), [])
    rng = _rng(seed)
    edges: set[tuple[int, int, int]] = set()
    for _ in range(attempts):
        t = tuple(sorted(rng.sample(range(n), 3)))
        if t in edges:
            continue
        trial = Hypergraph(n, tuple(sorted(edges | {t})))  # type: ignore[arg-type]
        if find_linear_cycle(trial, through=t) is None:
            edges.add(t)  # type: ignore[arg-type]
    return Hypergraph(n, tuple(sorted(edges)))
