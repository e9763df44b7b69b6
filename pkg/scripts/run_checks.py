"""Run every harness check over its desk-scale corpus and write JSON reports.

Usage: python3 scripts/run_checks.py [--out reports] [--workers 4]
"""

from __future__ import annotations

import argparse
import json
import time
from math import comb
from pathlib import Path

from lcfree.harness import CHECKS, parse_corpus

RANDOM = ",".join(f"random(n={n},m={n}..{comb(n, 3) // 2},seeds=0..13)" for n in range(5, 9))
FREE = ",".join(f"randomfree(n={n},attempts={8 * n},seeds=0..83)" for n in range(5, 11))

CORPORA = {
    "min3": RANDOM,
    "min3x1": RANDOM,
    "alpha": FREE + ",k53(copies=1..5),star(n=5..9)",
    "thm1": FREE,
    "conj1": "randomfree(n=5..8,attempts=50,seeds=0..49)",
    "prob1": FREE + ",star(n=5..9)",
    "stability": FREE,
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="reports")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--only", nargs="*", choices=sorted(CHECKS))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in args.only or CORPORA:
        corpus = parse_corpus(CORPORA[name])
        t0 = time.perf_counter()
        report = CHECKS[name](corpus, workers=args.workers)
        elapsed = time.perf_counter() - t0
        (out / f"{name}.json").write_text(json.dumps(report.to_dict(), indent=2) + "\n")
        print(
            f"{name:10s} instances={report.instances:5d} violations={len(report.violations)} "
            f"budget={report.budget_exhausted} {elapsed:6.1f}s"
        )


if __name__ == "__main__":
    main()
