#!/usr/bin/env python3
"""Randomized cross-check of the splitting criteria.

For each scroll, draws seeded random direct sums and compares the
closed-form decision procedures against structural characterizations
and brute-force twist scans.  Exits nonzero on any mismatch.
"""

import argparse
import sys

from scrollcalc import Scroll
from scrollcalc.harness import DEFAULT_SCROLLS, run_split_harness


def parse_scrolls(text: str) -> list[Scroll]:
    out = []
    for part in text.split(";"):
        a0, a1 = part.split(",")
        out.append(Scroll(int(a0), int(a1)))
    return out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=1000, help="bundles per scroll")
    parser.add_argument(
        "--scrolls",
        type=parse_scrolls,
        default=[Scroll(a0, a1) for a0, a1 in DEFAULT_SCROLLS],
        metavar="A0,A1;A0,A1;...",
    )
    parser.add_argument("--window", type=int, default=15, help="brute-force twist window half-width")
    args = parser.parse_args(argv)

    bad = 0
    for s in args.scrolls:
        report = run_split_harness(
            s, count=args.count, seed=args.seed, window=(-args.window, args.window)
        )
        print(report.summary())
        if not report.ok:
            bad += 1
    if bad:
        print(f"{bad} scroll(s) with mismatches", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
