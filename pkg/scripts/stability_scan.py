"""Scan saturated cycle-free instances for the smallest alpha/n.

K5^3 components are excluded, so the output shows how far above 2/5 the
ratio stays once the tight example is ruled out.

Usage: python3 scripts/stability_scan.py --n 6 10 --seeds 200
"""

from __future__ import annotations

import argparse
import json

from lcfree.harness import parse_corpus, stability_scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", nargs=2, type=int, default=(6, 10), metavar=("LO", "HI"))
    ap.add_argument("--seeds", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    rows = []
    for n in range(args.n[0], args.n[1] + 1):
        corpus = parse_corpus(f"randomfree(n={n},attempts={10 * n},seeds=0..{args.seeds - 1})")
        rep = stability_scan(corpus, workers=args.workers)
        best = rep.stats["min_alpha_ratio"]
        rows.append({"n": n, "min_alpha_ratio": best, "argmin": rep.stats["argmin"],
                     "excluded_k53": rep.stats["excluded_k53"]})
        print(f"n={n:2d} min alpha/n={best['fraction'] if best else '-':>6} "
              f"excluded={rep.stats['excluded_k53']}")
    print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
