#!/usr/bin/env python3
"""Survey log-bundle splitting types over arrangement counts.

Prints one row per supported arrangement with the predicted splitting,
whether it passes the residue-sequence consistency checks, and whether
the bundle is regular and ACM.  Useful for eyeballing how the regular
ACM classification emerges.
"""

import argparse

from scrollcalc import (
    Scroll,
    Sum,
    Verdict,
    format_bundle,
    is_acm,
    is_regular,
    log_splitting_type,
    residue_consistency,
    twist_rectangle,
    validate_arrangement,
)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scroll", default="2,2", metavar="A0,A1")
    parser.add_argument("--max-lines", type=int, default=8)
    parser.add_argument("--max-curves", type=int, default=4)
    parser.add_argument("--grid", type=int, nargs=2, default=(4, 6), metavar=("HB", "FB"))
    args = parser.parse_args(argv)

    a0, a1 = (int(x) for x in args.scroll.split(","))
    s = Scroll(a0, a1)
    grid = twist_rectangle(*args.grid)

    print(f"{s}: c = {s.c}, e = {s.e}")
    print("lines curves splitting           consistent regular acm")
    for a in range(0, args.max_lines + 1):
        for b in range(0, args.max_curves + 1):
            if s.e > 0 and b >= 2:
                continue
            arr = validate_arrangement(s, a, b)
            if not arr.supported:
                continue
            split = log_splitting_type(arr)
            report = residue_consistency(arr, split, grid)
            regular = is_regular(s, Sum(split)).verdict is Verdict.TRUE
            acm = is_acm(s, Sum(split)).verdict is Verdict.TRUE
            mark = "*" if (regular and acm) else " "
            print(
                f"{a:5d} {b:6d} {format_bundle(Sum(split)):20s}"
                f" {str(report.ok).lower():10s} {str(regular).lower():7s} {str(acm).lower()}{mark}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
