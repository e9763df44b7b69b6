"""Search for a hypergraph with no partition into alpha cycle classes.

A ``fails`` verdict is written in full to the output directory so it can
be replayed with ``lcfree analyze``.

Usage: python3 scripts/conjecture_scan.py --n 5 9 --seeds 100 --out counterexamples
"""

from __future__ import annotations

import argparse
from collections import Counter
from pathlib import Path

from lcfree.generators import random_cycle_free, random_hypergraph
from lcfree.harness import check_conjecture1
from lcfree.textformat import save


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", nargs=2, type=int, default=(5, 9), metavar=("LO", "HI"))
    ap.add_argument("--seeds", type=int, default=100)
    ap.add_argument("--cyclic", action="store_true", help="also scan unrestricted random instances")
    ap.add_argument("--out", default="counterexamples")
    args = ap.parse_args()
    tally: Counter[str] = Counter()
    for n in range(args.n[0], args.n[1] + 1):
        for seed in range(args.seeds):
            h = random_cycle_free(n, 8 * n, seed)
            if args.cyclic and seed % 2:
                h = random_hypergraph(n, min(2 * n, n * (n - 1) * (n - 2) // 6), seed)
            v = check_conjecture1(h)
            tally[v.status] += 1
            if v.status == "fails":
                path = Path(args.out) / f"n{n}_seed{seed}.txt"
                path.parent.mkdir(parents=True, exist_ok=True)
                save(h, path)
                print(f"fails: {path} (alpha={v.alpha})")
    print(dict(tally))


if __name__ == "__main__":
    main()
