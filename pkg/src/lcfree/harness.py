"""Corpus-level checks of the theorems and open problems.

Each check walks a corpus, runs a per-instance function (optionally in a
process pool) and folds the outcomes, in corpus order, into a
:class:`Report`. Budget exhaustion is always counted separately and never
read as a verdict.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import product
from typing import Any

from lcfree import generators as gen
from lcfree.construct import independent_two_fifths, rho_partition, three_coloring
from lcfree.core import Hypergraph, is_independent, min_strong_degree
from lcfree.cycles import CycleCertificate, enumerate_linear_cycles, find_linear_cycle, verify_cycle
from lcfree.errors import (
    CapExceeded,
    CaseContradiction,
    ColoringViolation,
    IndependenceViolation,
    SearchBudgetExceeded,
)
from lcfree.oracle import ALPHA_CAP, CHI_CAP, contains_k53, exact_alpha, exact_chi
from lcfree.textformat import emit

DEFAULT_BUDGET = 10**7
CONJ1_MAX_N = 9

NEAR_SKELETON_NOTE = (
    "near-skeleton strengthening checked only through its whole-hypergraph "
    "corollaries (min strong degree >= 3, with at most one exception)"
)
CONJ1_NOTE = "a cycle class is exactly the vertex set of a linear cycle of H; certificate stored"


# ---------------------------------------------------------------- corpora


@dataclass(frozen=True)
class Instance:
    label: str
    hypergraph: Hypergraph


@dataclass(frozen=True)
class Corpus:
    description: str
    instances: tuple[Instance, ...]

    def __len__(self) -> int:
        return len(self.instances)

    def __iter__(self):
        return iter(self.instances)


GENERATORS: dict[str, tuple[Callable[..., Hypergraph], tuple[str, ...]]] = {
    "k53": (gen.complete_k53, ("copies",)),
    "star": (gen.full_star, ("n",)),
    "tight": (gen.tight_two_exceptions, ("k",)),
    "path": (gen.linear_path, ("k",)),
    "cyclegen": (gen.linear_cycle_gen, ("k",)),
    "random": (gen.random_hypergraph, ("n", "m", "seed")),
    "randomfree": (gen.random_cycle_free, ("n", "attempts", "seed")),
}

_CALL = re.compile(r"\s*(\w+)\s*\(([^()]*)\)\s*(?:,|$)")


def _values(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def parse_corpus(spec: str) -> Corpus:
    """Expand ``name(key=v|a..b, ...)`` calls, comma separated, in written order.

    ``seeds`` is accepted for ``seed``. Ranges are inclusive and expand as a
    cartesian product with the last parameter varying fastest.
    """
    pos = 0
    instances: list[Instance] = []
    spec = spec.strip()
    while pos < len(spec):
        m = _CALL.match(spec, pos)
        if not m:
            raise ValueError(f"bad corpus spec near {spec[pos:]!r}")
        pos = m.end()
        name, body = m.group(1), m.group(2)
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        fn, names = GENERATORS[name]
        params: dict[str, list[int]] = {}
        for item in filter(None, (s.strip() for s in body.split(","))):
            key, _, val = item.partition("=")
            key = key.strip()
            key = "seed" if key == "seeds" else key
            if key not in names:
                raise ValueError(f"{name} takes {names}, not {key!r}")
            params[key] = _values(val.strip())
        missing = [k for k in names if k not in params]
        if missing:
            raise ValueError(f"{name} is missing {missing}")
        for combo in product(*(params[k] for k in names)):
            kwargs = dict(zip(names, combo))
            label = f"{name}(" + ",".join(f"{k}={v}" for k, v in kwargs.items()) + ")"
            instances.append(Instance(label, fn(**kwargs)))
    return Corpus(spec, tuple(instances))


def corpus_of(hypergraphs: Iterable[Hypergraph | Instance], description: str = "ad hoc") -> Corpus:
    items = [
        x if isinstance(x, Instance) else Instance(f"#{i}", x)
        for i, x in enumerate(hypergraphs)
    ]
    return Corpus(description, tuple(items))


# ---------------------------------------------------------------- reports


@dataclass
class Report:
    check: str
    corpus: str
    instances: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)
    budget_exhausted: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "corpus": self.corpus,
            "instances": self.instances,
            "violations": self.violations,
            "stats": self.stats,
            "budget_exhausted": self.budget_exhausted,
        }


@dataclass
class Outcome:
    label: str
    text: str
    violations: list[str] = field(default_factory=list)
    budget: bool = False
    data: dict[str, Any] = field(default_factory=dict)


def _run(fn: Callable[[Instance], Outcome], corpus: Corpus, workers: int) -> list[Outcome]:
    if workers <= 1:
        return [fn(inst) for inst in corpus]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, corpus.instances, chunksize=8))


def _fold(name: str, corpus: Corpus, outcomes: list[Outcome]) -> Report:
    rep = Report(name, corpus.description, instances=len(outcomes))
    for o in outcomes:
        rep.budget_exhausted += o.budget
        for detail in o.violations:
            rep.violations.append({"label": o.label, "instance": o.text, "details": detail})
    return rep


def _outcome(inst: Instance) -> Outcome:
    return Outcome(inst.label, emit(inst.hypergraph))


def _cycle_free(h: Hypergraph, budget: int) -> bool | None:
    """True/False, or None when the search ran out of budget."""
    try:
        return find_linear_cycle(h, budget) is None
    except SearchBudgetExceeded:
        return None


def _ratio(fr: Fraction | None) -> dict[str, Any] | None:
    if fr is None:
        return None
    return {"fraction": f"{fr.numerator}/{fr.denominator}", "value": float(fr)}


# ---------------------------------------------------------------- strong degree forces a cycle


def _min3_one(inst: Instance, exceptions: int, budget: int) -> Outcome:
    out = _outcome(inst)
    h = inst.hypergraph
    d, _ = min_strong_degree(h, exceptions)
    out.data["qualifies"] = d >= 3
    if d < 3:
        return out
    try:
        cert = find_linear_cycle(h, budget)
    except SearchBudgetExceeded:
        out.budget = True
        return out
    if cert is None:
        out.violations.append(
            f"strong degree >= 3 at all but {exceptions} vertices, yet no linear cycle"
        )
    elif not verify_cycle(h, cert):
        out.violations.append(f"certificate {cert.edges} does not verify")
    else:
        out.data["certified"] = True
    return out


def check_min3(corpus: Corpus, budget: int = DEFAULT_BUDGET, workers: int = 1) -> Report:
    outcomes = _run(partial(_min3_one, exceptions=0, budget=budget), corpus, workers)
    rep = _fold("min3", corpus, outcomes)
    rep.stats = {
        "qualifying": sum(o.data.get("qualifies", False) for o in outcomes),
        "certified": sum(o.data.get("certified", False) for o in outcomes),
        "note": NEAR_SKELETON_NOTE,
    }
    return rep


def _sharp_one(inst: Instance, budget: int) -> Outcome:
    out = _min3_one(inst, 1, budget)
    h = inst.hypergraph
    if out.data["qualifies"] or out.budget:
        return out
    d2, _ = min_strong_degree(h, 2)
    if d2 >= 3:
        free = _cycle_free(h, budget)
        if free is None:
            out.budget = True
        out.data["two_exception_cycle_free"] = bool(free)
    return out


def check_min3_one_exception(
    corpus: Corpus,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    sharpness: Iterable[int] = (5, 7),
) -> Report:
    """One-exception strong degree check, plus the two-exception family showing sharpness."""
    outcomes = _run(partial(_sharp_one, budget=budget), corpus, workers)
    rep = _fold("min3x1", corpus, outcomes)
    witnesses = []
    for k in sharpness:
        h = gen.tight_two_exceptions(k)
        label = f"tight(k={k})"
        d1, _ = min_strong_degree(h, 1)
        d2, extra = min_strong_degree(h, 2)
        free = _cycle_free(h, budget)
        if free is None:
            rep.budget_exhausted += 1
        elif not free or d2 < 3 or d1 >= 3:
            rep.violations.append({
                "label": label,
                "instance": emit(h),
                "details": f"expected cycle-free with d+>=3 off two vertices; "
                           f"cycle_free={free}, d1={d1}, d2={d2}",
            })
        else:
            witnesses.append({"label": label, "exceptional": list(extra)})
    rep.stats = {
        "qualifying": sum(o.data.get("qualifies", False) for o in outcomes),
        "certified": sum(o.data.get("certified", False) for o in outcomes),
        "two_exception_cycle_free": sum(
            o.data.get("two_exception_cycle_free", False) for o in outcomes
        ),
        "sharpness_witnesses": witnesses,
        "note": NEAR_SKELETON_NOTE,
    }
    return rep


# ---------------------------------------------------------------- independence ratio


def _alpha_one(inst: Instance, budget: int, alpha_cap: int) -> Outcome:
    out = _outcome(inst)
    h = inst.hypergraph
    free = _cycle_free(h, budget)
    if free is None:
        out.budget = True
        return out
    if not free or h.n == 0:
        return out
    out.data["examined"] = True
    try:
        res = independent_two_fifths(h, budget)
    except SearchBudgetExceeded:
        out.budget = True
        return out
    except (CaseContradiction, IndependenceViolation) as exc:
        out.violations.append(f"{type(exc).__name__}: {exc}")
        return out
    S = res.S
    if not is_independent(h, S):
        out.violations.append(f"constructed S={sorted(S)} is not independent")
    if 5 * len(S) < 2 * h.n:
        out.violations.append(f"|S|={len(S)} below 2n/5 for n={h.n}")
    for step in res.trace:
        if not step.ratio_ok():
            out.violations.append(f"step {step} places fewer than 2/5")
    out.data["construct_ratio"] = Fraction(len(S), h.n)
    if h.n <= alpha_cap:
        alpha, _ = exact_alpha(h, alpha_cap)
        out.data["alpha_ratio"] = Fraction(alpha, h.n)
        if 5 * alpha < 2 * h.n:
            out.violations.append(f"alpha={alpha} below 2n/5 for n={h.n}")
        if len(S) > alpha:
            out.violations.append(f"|S|={len(S)} exceeds alpha={alpha}")
    return out


def check_alpha_bound(
    corpus: Corpus, budget: int = DEFAULT_BUDGET, workers: int = 1, alpha_cap: int = ALPHA_CAP
) -> Report:
    outcomes = _run(partial(_alpha_one, budget=budget, alpha_cap=alpha_cap), corpus, workers)
    rep = _fold("alpha", corpus, outcomes)
    alphas = [(o.data["alpha_ratio"], o.label) for o in outcomes if "alpha_ratio" in o.data]
    built = [o.data["construct_ratio"] for o in outcomes if "construct_ratio" in o.data]
    rep.stats = {
        "cycle_free_examined": sum(o.data.get("examined", False) for o in outcomes),
        "min_alpha_ratio": _ratio(min(alphas)[0]) if alphas else None,
        "argmin_alpha_ratio": min(alphas)[1] if alphas else None,
        "min_construct_ratio": _ratio(min(built)) if built else None,
    }
    return rep


# ---------------------------------------------------------------- partition and coloring


def _thm1_one(inst: Instance, budget: int, alpha_cap: int, chi_cap: int) -> Outcome:
    out = _outcome(inst)
    h = inst.hypergraph
    free = _cycle_free(h, budget)
    if free is None:
        out.budget = True
        return out
    if not free:
        return out
    out.data["examined"] = True
    classes = rho_partition(h)
    try:
        three_coloring(h)
    except ColoringViolation as exc:
        out.violations.append(f"ColoringViolation: {exc}")
    if h.n <= alpha_cap:
        alpha, _ = exact_alpha(h, alpha_cap)
        out.data["rho_tight"] = len(classes) == alpha
        if len(classes) > alpha:
            out.violations.append(f"{len(classes)} partition classes exceed alpha={alpha}")
    if h.n <= chi_cap:
        chi, _ = exact_chi(h, chi_cap)
        out.data["chi"] = chi
        if chi > 3:
            out.violations.append(f"chromatic number {chi} exceeds 3")
    return out


def check_theorem1(
    corpus: Corpus,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    alpha_cap: int = ALPHA_CAP,
    chi_cap: int = CHI_CAP,
) -> Report:
    fn = partial(_thm1_one, budget=budget, alpha_cap=alpha_cap, chi_cap=chi_cap)
    outcomes = _run(fn, corpus, workers)
    rep = _fold("thm1", corpus, outcomes)
    chis = Counter(o.data["chi"] for o in outcomes if "chi" in o.data)
    rep.stats = {
        "cycle_free_examined": sum(o.data.get("examined", False) for o in outcomes),
        "rho_equals_alpha": sum(o.data.get("rho_tight", False) for o in outcomes),
        "chi_histogram": {str(k): chis[k] for k in sorted(chis)},
    }
    return rep


# ---------------------------------------------------------------- cycle-class partition


@dataclass(frozen=True)
class Conjecture1Verdict:
    status: str  # "holds", "fails" or "budget"
    alpha: int | None = None
    classes: tuple[frozenset[int], ...] = ()
    certificates: tuple[CycleCertificate | None, ...] = ()


def check_conjecture1(h: Hypergraph, budget: int = DEFAULT_BUDGET) -> Conjecture1Verdict:
    """Look for a partition into at most alpha(H) linear cycles, edge subsets and singletons."""
    if h.n > CONJ1_MAX_N:
        return Conjecture1Verdict("budget")
    alpha, _ = exact_alpha(h)
    options: dict[frozenset[int], CycleCertificate | None] = {}
    try:
        for cert in enumerate_linear_cycles(h, budget):
            options.setdefault(cert.vertices, cert)
    except SearchBudgetExceeded:
        return Conjecture1Verdict("budget", alpha)
    for e in h.edges:
        options.setdefault(frozenset(e), None)
        for i in range(3):
            options.setdefault(frozenset(e[:i] + e[i + 1:]), None)
    for v in range(h.n):
        options.setdefault(frozenset({v}), None)
    by_vertex: dict[int, list[frozenset[int]]] = {v: [] for v in range(h.n)}
    for cls in sorted(options, key=lambda c: (-len(c), sorted(c))):
        by_vertex[min(cls)].append(cls)
    biggest = max((len(c) for c in options), default=1)

    chosen: list[frozenset[int]] = []
    nodes = 0

    def rec(covered: frozenset[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded("cycle-class partition search")
        left = h.n - len(covered)
        if left == 0:
            return True
        if len(chosen) + -(-left // biggest) > alpha:
            return False
        v = min(set(range(h.n)) - covered)
        for cls in by_vertex[v]:
            if covered.isdisjoint(cls):
                chosen.append(cls)
                if rec(covered | cls):
                    return True
                chosen.pop()
        return False

    try:
        found = rec(frozenset())
    except SearchBudgetExceeded:
        return Conjecture1Verdict("budget", alpha)
    if not found:
        return Conjecture1Verdict("fails", alpha)
    return Conjecture1Verdict(
        "holds", alpha, tuple(chosen), tuple(options[c] for c in chosen)
    )


def _conj1_one(inst: Instance, budget: int) -> Outcome:
    out = _outcome(inst)
    h = inst.hypergraph
    free = _cycle_free(h, budget)
    if free is None:
        out.budget = True
        return out
    if not free:
        return out
    verdict = check_conjecture1(h, budget)
    out.data["status"] = verdict.status
    if verdict.status == "budget":
        out.budget = True
    elif verdict.status == "fails":
        out.violations.append(f"no partition into at most alpha={verdict.alpha} classes")
    return out


def check_conjecture1_corpus(
    corpus: Corpus, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> Report:
    outcomes = _run(partial(_conj1_one, budget=budget), corpus, workers)
    rep = _fold("conj1", corpus, outcomes)
    statuses = Counter(o.data["status"] for o in outcomes if "status" in o.data)
    rep.stats = {"verdicts": dict(sorted(statuses.items())), "note": CONJ1_NOTE}
    return rep


# ---------------------------------------------------------------- chromatic and stability scans


def _k53_free_one(inst: Instance, budget: int, chi_cap: int, alpha_cap: int, want: str) -> Outcome:
    out = _outcome(inst)
    h = inst.hypergraph
    free = _cycle_free(h, budget)
    if free is None:
        out.budget = True
        return out
    if not free or h.n == 0:
        return out
    try:
        if contains_k53(h) is not None:
            out.data["has_k53"] = True
            return out
        if want == "chi":
            chi, coloring = exact_chi(h, chi_cap)
            out.data["chi"] = chi
            if chi >= 3:
                out.violations.append(f"K5^3-free, cycle-free, chromatic number {chi}")
        else:
            alpha, _ = exact_alpha(h, alpha_cap)
            out.data["alpha_ratio"] = Fraction(alpha, h.n)
            if 5 * alpha < 2 * h.n:
                out.violations.append(f"alpha={alpha} below 2n/5")
    except CapExceeded:
        out.budget = True
    return out


def check_problem1(
    corpus: Corpus, budget: int = DEFAULT_BUDGET, workers: int = 1, chi_cap: int = CHI_CAP
) -> Report:
    """Chromatic numbers of K5^3-free cycle-free instances; chi = 3 is a candidate."""
    fn = partial(_k53_free_one, budget=budget, chi_cap=chi_cap, alpha_cap=ALPHA_CAP, want="chi")
    outcomes = _run(fn, corpus, workers)
    rep = _fold("prob1", corpus, outcomes)
    chis = Counter(o.data["chi"] for o in outcomes if "chi" in o.data)
    rep.stats = {
        "excluded_k53": sum(o.data.get("has_k53", False) for o in outcomes),
        "chi_histogram": {str(k): chis[k] for k in sorted(chis)},
    }
    return rep


def stability_scan(
    corpus: Corpus, budget: int = DEFAULT_BUDGET, workers: int = 1, alpha_cap: int = ALPHA_CAP
) -> Report:
    """Smallest alpha/n over K5^3-free cycle-free instances."""
    fn = partial(_k53_free_one, budget=budget, chi_cap=CHI_CAP, alpha_cap=alpha_cap, want="alpha")
    outcomes = _run(fn, corpus, workers)
    rep = _fold("stability", corpus, outcomes)
    scored = [(o.data["alpha_ratio"], i) for i, o in enumerate(outcomes) if "alpha_ratio" in o.data]
    best = min(scored) if scored else None
    rep.stats = {
        "excluded_k53": sum(o.data.get("has_k53", False) for o in outcomes),
        "scanned": len(scored),
        "min_alpha_ratio": _ratio(best[0]) if best else None,
        "argmin": {"label": outcomes[best[1]].label, "instance": outcomes[best[1]].text}
        if best else None,
    }
    return rep


CHECKS: dict[str, Callable[..., Report]] = {
    "min3": check_min3,
    "min3x1": check_min3_one_exception,
    "alpha": check_alpha_bound,
    "thm1": check_theorem1,
    "conj1": check_conjecture1_corpus,
    "prob1": check_problem1,
    "stability": stability_scan,
}
