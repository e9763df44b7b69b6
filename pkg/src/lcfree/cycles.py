"""Linear cycle certificates and a backtracking search for them."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from lcfree.core import Edge, Hypergraph
from lcfree.errors import SearchBudgetExceeded

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class CycleCertificate:
    edges: tuple[Edge, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)


def verify_cycle(h: Hypergraph, c: CycleCertificate | Sequence[Sequence[int]]) -> bool:
    """Check a certificate from scratch against ``h``."""
    edges = [tuple(sorted(e)) for e in (c.edges if isinstance(c, CycleCertificate) else c)]
    k = len(edges)
    if k < 3 or any(e not in h.edge_set for e in edges):
        return False
    sets = [set(e) for e in edges]
    joints = []
    for i in range(k):
        for j in range(i + 1, k):
            common = sets[i] & sets[j]
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if consecutive and len(common) != 1:
                return False
            if not consecutive and common:
                return False
    for i in range(k):
        (joint,) = sets[i] & sets[(i + 1) % k]
        joints.append(joint)
    return len(set(joints)) == k


def find_linear_cycle(
    h: Hypergraph,
    budget: int = DEFAULT_BUDGET,
    through: Sequence[int] | None = None,
) -> CycleCertificate | None:
    """Search for a linear cycle; None means none exists.

    Paths start at the smallest edge of the cycle and use only larger edges;
    of the two orientations only the one whose second edge is smaller than
    its last is kept. With ``through`` the search is restricted to cycles
    containing that edge, which is then the start.
    """
    nodes = 0
    inc = h.incidence

    def extend(path: list[Edge], used: set[int], start: Edge, free_start: tuple[int, ...],
               tail_free: tuple[int, ...], allowed) -> CycleCertificate | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"find_linear_cycle exceeded {budget} nodes")
        for v in tail_free:
            for e in inc[v]:
                if not allowed(e) or e in path:
                    continue
                others = [u for u in e if u != v]
                hits = [u for u in others if u in used]
                if not hits:
                    new = set(others)
                    path.append(e)
                    used |= new
                    found = extend(path, used, start, free_start, tuple(others), allowed)
                    if found:
                        return found
                    path.pop()
                    used -= new
                elif (
                    len(path) >= 2
                    and len(hits) == 1
                    and hits[0] in free_start
                    and path[1] < e
                ):
                    return CycleCertificate(tuple(path) + (e,))
        return None

    starts = [tuple(sorted(through))] if through is not None else list(h.edges)
    for start in starts:
        if through is not None:
            if start not in h.edge_set:
                raise ValueError(f"{start} is not an edge")
            allowed = lambda e, s=start: e != s  # noqa: E731
        else:
            allowed = lambda e, s=start: e > s  # noqa: E731
        for v in start:
            # v is the joint with the second edge; the closing edge meets start elsewhere
            free_start = tuple(u for u in start if u != v)
            for e in inc[v]:
                if not allowed(e):
                    continue
                others = tuple(u for u in e if u != v)
                if any(u in start for u in others):
                    continue
                nodes += 1
                found = extend(
                    [start, e], set(start) | set(others), start, free_start, others, allowed
                )
                if found:
                    return found
    return None


def enumerate_linear_cycles(h: Hypergraph, budget: int = DEFAULT_BUDGET):
    """Yield every linear cycle of ``h`` once, in the same canonical form."""
    inc = h.incidence
    nodes = 0

    def extend(path, used, free_start, tail_free, start):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"enumerate_linear_cycles exceeded {budget} nodes")
        for v in tail_free:
            for e in inc[v]:
                if e <= start or e in path:
                    continue
                others = [u for u in e if u != v]
                hits = [u for u in others if u in used]
                if not hits:
                    path.append(e)
                    used |= set(others)
                    yield from extend(path, used, free_start, tuple(others), start)
                    path.pop()
                    used -= set(others)
                elif len(path) >= 2 and len(hits) == 1 and hits[0] in free_start and path[1] < e:
                    yield CycleCertificate(tuple(path) + (e,))

    for start in h.edges:
        for v in start:
            free_start = tuple(u for u in start if u != v)
            for e in inc[v]:
                if e <= start:
                    continue
                others = tuple(u for u in e if u != v)
                if any(u in start for u in others):
                    continue
                yield from extend([start, e], set(start) | set(others), free_start, others, start)
