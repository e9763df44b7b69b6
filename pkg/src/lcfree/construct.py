"""Constructive bounds for linear-cycle-free hypergraphs.

* :func:`independent_two_fifths` builds an independent set of size at
  least ``2n/5`` from a sequence of maximum skeletons, peeling each one
  through its path- and star-endings.
* :func:`rho_partition` covers the vertices with edge subsets, using at
  most ``alpha(H)`` classes.
* :func:`three_coloring` colors each skeleton along its build order.

Every result is verified before it is returned.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace
from itertools import combinations

from lcfree.core import Hypergraph, is_independent
from lcfree.errors import CaseContradiction, ColoringViolation, IndependenceViolation
from lcfree.trees import (
    DEFAULT_BUDGET,
    Degenerate,
    Ending,
    IsolatedOnly,
    MixedForest,
    MixedTree,
    PathEnding,
    StarEnding,
    delete_vertices,
    find_ending,
    grow_skeleton,
    maximum_skeleton,
)


@dataclass(frozen=True)
class Step:
    """One case application: ``placed`` went to S, the rest of ``covered`` to Z."""

    tree: int
    case: str
    covered: tuple[int, ...]
    placed: tuple[int, ...]

    def ratio_ok(self) -> bool:
        return 5 * len(self.placed) >= 2 * len(self.covered)


@dataclass(frozen=True)
class ConstructionState:
    n: int
    S: frozenset[int] = frozenset()
    Z: frozenset[int] = frozenset()
    forest: MixedForest = field(default_factory=MixedForest)
    trace: tuple[Step, ...] = ()
    tree: int = 0

    @property
    def X(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.S - self.Z


@dataclass(frozen=True)
class TwoFifthsResult:
    S: frozenset[int]
    Z: frozenset[int]
    trace: tuple[Step, ...]
    skeletons: tuple[MixedTree, ...]

    def trace_dicts(self) -> list[dict]:
        return [asdict(s) for s in self.trace]


def _move(state: ConstructionState, case: str, to_s, to_z, delete) -> ConstructionState:
    to_s, to_z = frozenset(to_s), frozenset(to_z)
    step = Step(state.tree, case, tuple(sorted(to_s | to_z)), tuple(sorted(to_s)))
    return replace(
        state,
        S=state.S | to_s,
        Z=state.Z | to_z,
        forest=delete_vertices(state.forest, delete),
        trace=state.trace + (step,),
    )


def _witnesses(h: Hypergraph, u: int, w: int, skip: set[int]) -> set[int]:
    """Third vertices x of edges {u, w, x} with x outside ``skip``."""
    out = set()
    for e in h.incidence[u]:
        if w in e:
            (x,) = (v for v in e if v != u and v != w)
            if x not in skip:
                out.add(x)
    return out


def _case_one(
    h: Hypergraph, state: ConstructionState, roles: list[tuple[int, int, int, tuple[int, ...]]]
) -> ConstructionState:
    """Cases 1.1 / 1.2 for a 3-vertex pendant edge abc with joint b.

    ``roles`` lists candidate (a, b, c, rest_of_g) labelings in preference
    order. Case 1.1 needs, for some labeling, no edge abx with x outside
    Z and {c} and the rest of g. Otherwise each labeling is tried for 1.2,
    which needs the witnesses of abx and of bcx to be one common x in X.
    """
    Z = state.Z
    for a, b, c, rest in roles:
        for p, q in ((a, c), (c, a)):
            if not _witnesses(h, p, b, set(Z) | {q} | set(rest)):
                covered = {q, *rest}
                return _move(state, "1.1", {p, b}, covered, {p, b, q, *rest})
    X = state.X
    for a, b, c, rest in roles:
        w1 = _witnesses(h, a, b, set(Z) | {c} | set(rest))
        w2 = _witnesses(h, b, c, set(Z) | {a} | set(rest))
        if len(w1) == 1 and w1 == w2 and w1 <= X:
            (x,) = w1
            return _move(state, "1.2", {a, c}, {b, x}, {a, b, c, x})
    a, b, c, rest = roles[0]
    raise CaseContradiction(
        f"pendant edge {(a, b, c)}: witnesses abx={sorted(_witnesses(h, a, b, set(Z) | {c} | set(rest)))}, "
        f"bcx={sorted(_witnesses(h, b, c, set(Z) | {a} | set(rest)))} are not a single common vertex of X"
    )


def apply_case(
    h: Hypergraph, state: ConstructionState, ending: Ending | IsolatedOnly
) -> ConstructionState:
    """Apply the case matching ``ending`` and return the updated state."""
    if isinstance(ending, PathEnding) and len(ending.h) == 3:
        b = ending.joint
        a, c = (v for v in ending.h if v != b)
        rest = tuple(v for v in ending.g if v != b)
        return _case_one(h, state, [(a, b, c, rest)])
    if isinstance(ending, Degenerate) and len(ending.edge) == 3:
        roles = []
        for b in ending.edge:
            a, c = (v for v in ending.edge if v != b)
            roles.append((a, b, c, ()))
        return _case_one(h, state, roles)
    if isinstance(ending, (PathEnding, Degenerate)):
        if isinstance(ending, PathEnding):
            (leaf,) = (v for v in ending.h if v != ending.joint)
            inner = ending.joint
        else:
            leaf, inner = ending.edge
        return _move(state, "2", {leaf}, {inner}, {leaf, inner})
    if isinstance(ending, StarEnding):
        leaves = {min(v for v in e if v != ending.center) for e in ending.edges}
        rest = ending.vertices - leaves
        return _move(state, "3", leaves, rest, ending.vertices)
    if isinstance(ending, IsolatedOnly):
        iso = state.forest.isolated
        if not iso:
            return replace(state, forest=MixedForest())
        return _move(state, "4", iso, (), iso)
    raise TypeError(f"unknown ending {ending!r}")


def independent_two_fifths(h: Hypergraph, budget: int = DEFAULT_BUDGET) -> TwoFifthsResult:
    """Independent set S with 5|S| >= 2n, built skeleton by skeleton.

    Each round takes a maximum skeleton of the hypergraph induced by the
    uncovered vertices and peels it. When no edge is left among the
    uncovered vertices they all join S.
    """
    state = ConstructionState(h.n)
    skeletons: list[MixedTree] = []
    while True:
        t = maximum_skeleton(h, state.X, budget)
        if t is None:
            break
        skeletons.append(t)
        state = replace(state, forest=MixedForest((t,)), tree=len(skeletons))
        while True:
            ending = find_ending(state.forest)
            state = apply_case(h, state, ending)
            if isinstance(ending, IsolatedOnly):
                break
    rest = state.X
    if rest:
        state = _move(replace(state, tree=len(skeletons) + 1), "final", rest, (), rest)

    S, Z = state.S, state.Z
    if not is_independent(h, S):
        raise IndependenceViolation("constructed set contains an edge")
    if S & Z or len(S | Z) != h.n or 5 * len(S) < 2 * h.n:
        raise IndependenceViolation("construction lost track of the vertex cover")
    return TwoFifthsResult(S, Z, state.trace, tuple(skeletons))


def pair_shadow_violations(h: Hypergraph, result: TwoFifthsResult) -> list[tuple]:
    """Pairs placed together in one step that lie in an edge with another S vertex."""
    bad = []
    for step in result.trace:
        for u, w in combinations(step.placed, 2):
            for e in h.incidence[u]:
                if w in e:
                    (x,) = (v for v in e if v not in (u, w))
                    if x in result.S:
                        bad.append((step, e))
    return bad


def skeleton_decomposition(h: Hypergraph) -> tuple[list[MixedTree], frozenset[int]]:
    """Greedy skeletons on successively smaller vertex sets, plus the edgeless rest."""
    active = set(range(h.n))
    trees = []
    while True:
        seed = next((e for e in h.edges if active.issuperset(e)), None)
        if seed is None:
            return trees, frozenset(active)
        t = grow_skeleton(h, active, seed)
        trees.append(t)
        active -= t.vertices


def rho_partition(h: Hypergraph) -> list[frozenset[int]]:
    """Partition V into edge subsets and singletons.

    Peeling a tree from its last edge back to the root, each edge
    contributes the vertices it added, so a tree with k edges gives k
    classes.
    """
    trees, rest = skeleton_decomposition(h)
    classes: list[frozenset[int]] = []
    for t in trees:
        for e, at in zip(reversed(t.edges), reversed(t.attach)):
            classes.append(frozenset(v for v in e if v != at))
    classes.extend(frozenset({v}) for v in sorted(rest))
    _check_partition(h, classes)
    return classes


def _check_partition(h: Hypergraph, classes: list[frozenset[int]]) -> None:
    seen: set[int] = set()
    for c in classes:
        if not c or seen & c:
            raise ValueError("partition classes overlap or are empty")
        if len(c) > 1 and not any(c <= set(e) for e in h.edges):
            raise ValueError(f"class {sorted(c)} is not inside an edge")
        seen |= c
    if seen != set(range(h.n)):
        raise ValueError("partition does not cover every vertex")


def three_coloring(h: Hypergraph) -> dict[int, int]:
    """Proper coloring with colors 1, 2, 3.

    Root edges take 1, 2, 3; an edge attached at a vertex of color c gives
    the other two colors to its new vertices; uncovered vertices take 1.
    """
    trees, rest = skeleton_decomposition(h)
    color: dict[int, int] = {v: 1 for v in rest}
    for t in trees:
        root = t.edges[0]
        for v, col in zip(root, (1, 2, 3)):
            color[v] = col
        for e, at in zip(t.edges[1:], t.attach[1:]):
            free = [col for col in (1, 2, 3) if col != color[at]]
            for v, col in zip((v for v in e if v != at), free):
                color[v] = col
    for e in h.edges:
        if color[e[0]] == color[e[1]] == color[e[2]]:
            raise ColoringViolation(f"edge {e} is monochromatic")
    return color
