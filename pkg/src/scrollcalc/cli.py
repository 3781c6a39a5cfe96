"""Command line front end.

Exit codes: 0 when a result was computed (negative and indeterminate
verdicts included), 2 for usage or bundle-spec parse errors, 3 for
domain errors such as invalid scrolls or unsupported arrangements.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bundlespec import format_bundle, parse_bundle_spec
from .cohomology import line_cohomology
from .errors import ParseError, RankMismatch, ScrollCalcError
from .extensions import Probe, Sum, Verdict, extension_cohomology, ext1_dim
from .logbundles import (
    classify_regular_acm_log,
    log_splitting_type,
    residue_consistency,
    twist_rectangle,
    validate_arrangement,
    FORMULA_ONLY_FLAG,
)
from .regularity import is_pp_regular, reg
from .scroll import DivisorClass, make_scroll
from .splitting import (
    decide_split_acm3,
    decide_split_tH,
    detect_line_summand,
    is_acm,
    is_ulrich,
    make_ulrich,
)

_SPLIT_WORDS = {Verdict.TRUE: "splits", Verdict.FALSE: "fails", Verdict.INDETERMINATE: "indeterminate"}


def _int_pair(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(",")
        return (int(a), int(b))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'A,B' with integers, got {text!r}")


def _twist_ranges(text: str) -> tuple[tuple[int, int], tuple[int, int]]:
    try:
        hpart, fpart = text.split(",")
        hlo, hhi = (int(x) for x in hpart.split(":"))
        flo, fhi = (int(x) for x in fpart.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'HMIN:HMAX,FMIN:FMAX', got {text!r}")
    if hlo > hhi or flo > fhi:
        raise argparse.ArgumentTypeError("twist ranges must be nondecreasing")
    return ((hlo, hhi), (flo, fhi))


def _emit_json(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _scroll_obj(s) -> dict:
    return {"a0": s.a0, "a1": s.a1}


def _probe_obj(p: Probe) -> dict:
    return {"name": p.name, "twist": [p.twist.h, p.twist.f], "lo": p.lo, "hi": p.hi}


def _cmd_cohomology(args) -> int:
    s = make_scroll(*args.scroll)
    d = DivisorClass(*args.divisor)
    rec = line_cohomology(s, d)
    if args.json:
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "divisor": [d.h, d.f],
                "h": [rec.h0, rec.h1, rec.h2],
                "chi": rec.chi,
            }
        )
    else:
        print(f"h0 = {rec.h0}")
        print(f"h1 = {rec.h1}")
        print(f"h2 = {rec.h2}")
        print(f"chi = {rec.chi}")
    return 0


def _cmd_table(args) -> int:
    s = make_scroll(*args.scroll)
    b = parse_bundle_spec(args.bundle)
    (hlo, hhi), (flo, fhi) = args.twists
    print("tH,tf,h0,h1,h2,chi")
    for th in range(hlo, hhi + 1):
        for tf in range(flo, fhi + 1):
            iv = extension_cohomology(s, b, DivisorClass(th, tf))
            cells = [
                str(iv.lo(i)) if iv.forced_at(i) else f"{iv.lo(i)}..{iv.hi(i)}"
                for i in range(3)
            ]
            print(f"{th},{tf},{cells[0]},{cells[1]},{cells[2]},{iv.chi}")
    return 0


def _cmd_regularity(args) -> int:
    s = make_scroll(*args.scroll)
    b = parse_bundle_spec(args.bundle)
    report = is_pp_regular(s, b, args.p, args.pp)
    r = reg(s, b)
    reg_out = r if isinstance(r, int) else r.value
    if args.json:
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "input": {"bundle": format_bundle(b), "p": args.p, "pp": args.pp},
                "verdict": report.verdict.value,
                "reg": reg_out,
                "witnesses": [_probe_obj(p) for p in report.witnesses],
                "flags": {},
            }
        )
    else:
        print(f"verdict: {report.verdict.value}")
        print(f"reg: {reg_out}")
        for p in report.witnesses:
            print(f"probe: {p.describe()}")
    return 0


def _split_output(args, verdict) -> int:
    word = _SPLIT_WORDS[verdict.outcome]
    witnesses: list[dict] = []
    if verdict.failure is not None:
        witnesses.append(
            {"condition": verdict.failure.condition, "t": verdict.failure.t, "value": verdict.failure.value}
        )
    witnesses.extend(_probe_obj(p) for p in verdict.probes)
    if args.json:
        obj = {
            "scroll": _scroll_obj(args._scroll_obj),
            "input": args._bundle_text,
            "verdict": word,
        }
        if verdict.witness is not None:
            obj["splitting"] = format_bundle(Sum(verdict.witness))
        obj["witnesses"] = witnesses
        obj["flags"] = {"note": verdict.note} if verdict.note else {}
        _emit_json(obj)
    else:
        print(f"verdict: {word}")
        if verdict.witness is not None:
            print(f"splitting: {format_bundle(Sum(verdict.witness))}")
        if verdict.failure is not None:
            w = verdict.failure
            print(f"witness: {w.condition} at t = {w.t}, value {w.value}")
        for p in verdict.probes:
            print(f"unresolved: {p.describe()}")
        if verdict.note:
            print(f"note: {verdict.note}")
    return 0


def _cmd_split(args, decide) -> int:
    s = make_scroll(*args.scroll)
    b = parse_bundle_spec(args.bundle)
    args._scroll_obj = s
    args._bundle_text = format_bundle(b)
    return _split_output(args, decide(s, b))


def _cmd_summand(args) -> int:
    s = make_scroll(*args.scroll)
    b = parse_bundle_spec(args.bundle)
    result = detect_line_summand(s, b)
    if args.json:
        obj = {
            "scroll": _scroll_obj(s),
            "input": format_bundle(b),
            "verdict": result.verdict.value,
        }
        if result.summand is not None:
            obj["summand"] = str(result.summand)
        obj["witnesses"] = (
            [_probe_obj(result.witness)] if result.witness is not None else []
        ) + [_probe_obj(p) for p in result.probes]
        obj["flags"] = {}
        _emit_json(obj)
    else:
        print(f"verdict: {result.verdict.value}")
        if result.summand is not None:
            print(f"summand: {result.summand}")
        if result.witness is not None:
            print(f"witness: {result.witness.describe()}")
        for p in result.probes:
            print(f"probe: {p.describe()}")
    return 0


def _cmd_acm(args) -> int:
    s = make_scroll(*args.scroll)
    b = parse_bundle_spec(args.bundle)
    result = is_acm(s, b)
    if args.json:
        witnesses = []
        if result.witness_t is not None:
            witnesses.append({"t": result.witness_t, "value": result.witness_value})
        witnesses.extend(_probe_obj(p) for p in result.probes)
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "input": format_bundle(b),
                "verdict": result.verdict.value,
                "witnesses": witnesses,
                "flags": {},
            }
        )
    else:
        print(f"verdict: {result.verdict.value}")
        if result.witness_t is not None:
            print(f"witness: t = {result.witness_t}, h1 = {result.witness_value}")
        for p in result.probes:
            print(f"unresolved: {p.describe()}")
    return 0


def _cmd_ulrich(args) -> int:
    s = make_scroll(*args.scroll)
    b = parse_bundle_spec(args.bundle)
    result = is_ulrich(s, b)
    if args.json:
        witnesses = []
        if result.witness is not None:
            witnesses.append(_probe_obj(result.witness))
        elif result.verdict is Verdict.INDETERMINATE:
            witnesses.extend(_probe_obj(p) for p in result.probes)
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "input": format_bundle(b),
                "verdict": result.verdict.value,
                "witnesses": witnesses,
                "flags": {},
            }
        )
    else:
        print(f"verdict: {result.verdict.value}")
        if result.witness is not None:
            print(f"witness: {result.witness.describe()}")
        elif result.verdict is Verdict.INDETERMINATE:
            for p in result.probes:
                print(f"unresolved: {p.describe()}")
    return 0


def _cmd_ulrich_make(args) -> int:
    s = make_scroll(*args.scroll)
    b = make_ulrich(s, args.a, args.b)
    result = is_ulrich(s, b)
    if args.json:
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "input": {"a": args.a, "b": args.b},
                "bundle": format_bundle(b),
                "verdict": result.verdict.value,
                "witnesses": [],
                "flags": {},
            }
        )
    else:
        print(f"bundle: {format_bundle(b)}")
        print(f"verdict: {result.verdict.value}")
    return 0


def _cmd_ext1(args) -> int:
    s = make_scroll(*args.scroll)
    from_ = DivisorClass(*args.from_)
    to = DivisorClass(*args.to)
    dim = ext1_dim(s, from_, to)
    if args.json:
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "input": {"from": [from_.h, from_.f], "to": [to.h, to.f]},
                "ext1": dim,
                "witnesses": [],
                "flags": {},
            }
        )
    else:
        print(f"ext1 = {dim}")
    return 0


def _cmd_log(args) -> int:
    s = make_scroll(*args.scroll)
    arr = validate_arrangement(s, args.lines, args.curves)
    split = log_splitting_type(arr)
    flags = {"supported": arr.supported, "formula_only": FORMULA_ONLY_FLAG in arr.flags}
    if args.json:
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "input": {"lines": args.lines, "curves": args.curves},
                "splitting": format_bundle(Sum(split)),
                "witnesses": [],
                "flags": flags,
            }
        )
    else:
        print(f"splitting: {format_bundle(Sum(split))}")
        for key, value in flags.items():
            print(f"{key}: {str(value).lower()}")
    return 0


def _cmd_log_check(args) -> int:
    s = make_scroll(*args.scroll)
    arr = validate_arrangement(s, args.lines, args.curves)
    if args.claimed is None:
        claimed = log_splitting_type(arr)
    else:
        parsed = parse_bundle_spec(args.claimed)
        if not isinstance(parsed, Sum):
            raise RankMismatch("the claimed splitting must be a direct sum of line bundles")
        claimed = parsed.bundle
    (hlo, hhi), (flo, fhi) = args.twists
    grid = tuple(
        DivisorClass(th, tf) for th in range(hlo, hhi + 1) for tf in range(flo, fhi + 1)
    )
    report = residue_consistency(arr, claimed, grid)
    failed = [c for c in report.chi_checks if not c.ok]
    verdict = "true" if report.ok else "false"
    if args.json:
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "input": {
                    "lines": args.lines,
                    "curves": args.curves,
                    "claimed": format_bundle(Sum(claimed)),
                },
                "verdict": verdict,
                "c1_ok": report.c1_check,
                "chi_total": len(report.chi_checks),
                "chi_failed": len(failed),
                "witnesses": [
                    {"twist": [c.twist.h, c.twist.f], "lhs": c.lhs, "rhs": c.rhs}
                    for c in failed[:5]
                ],
                "flags": {},
            }
        )
    else:
        print(f"verdict: {verdict}")
        print(f"c1: {'ok' if report.c1_check else 'mismatch, expected ' + str(report.c1_expected)}")
        print(f"chi: {len(report.chi_checks) - len(failed)}/{len(report.chi_checks)} ok")
        for c in failed[:5]:
            print(f"chi mismatch at twist {c.twist}: claimed {c.lhs}, residue {c.rhs}")
    return 0


def _cmd_classify_log(args) -> int:
    s = make_scroll(*args.scroll)
    results = classify_regular_acm_log(s, args.max_lines, args.max_curves)
    if args.json:
        _emit_json(
            {
                "scroll": _scroll_obj(s),
                "input": {"max_lines": args.max_lines, "max_curves": args.max_curves},
                "classification": [
                    {"lines": a, "curves": b, "splitting": format_bundle(Sum(split))}
                    for a, b, split in results
                ],
                "witnesses": [],
                "flags": {},
            }
        )
    else:
        for a, b, split in results:
            print(f"({a},{b}): {format_bundle(Sum(split))}")
        print(f"count: {len(results)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrollcalc",
        description="exact cohomology and bundle calculus on rational normal scrolls",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, scroll=True, bundle=False, divisor=False, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        if scroll:
            p.add_argument("--scroll", type=_int_pair, required=True, metavar="A0,A1")
        if divisor:
            p.add_argument("--divisor", type=_int_pair, required=True, metavar="H,F")
        if bundle:
            p.add_argument("--bundle", required=True, metavar="SPEC")
        if json_flag:
            p.add_argument("--json", action="store_true")
        p.set_defaults(handler=handler)
        return p

    add("cohomology", _cmd_cohomology, "h^i and chi of one line bundle", divisor=True)

    p = add("table", _cmd_table, "CSV sweep of h^i over a twist rectangle", bundle=True, json_flag=False)
    p.add_argument("--twists", type=_twist_ranges, default=((-2, 2), (-3, 3)), metavar="HMIN:HMAX,FMIN:FMAX")

    p = add("regularity", _cmd_regularity, "regularity test and least regular h-twist", bundle=True)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--pp", type=int, default=0)

    add("split-h", lambda a: _cmd_split(a, decide_split_tH), "does the bundle split into h-twists of O", bundle=True)
    add("split-acm", lambda a: _cmd_split(a, decide_split_acm3), "does it split into twists of O, O(f), O(H-f)", bundle=True)
    add("summand", _cmd_summand, "detect a distinguished line summand of a regular bundle", bundle=True)
    add("acm", _cmd_acm, "is h^1(E(tH)) = 0 for every t", bundle=True)
    add("ulrich", _cmd_ulrich, "do all h^i(E(-H)) and h^i(E(-2H)) vanish", bundle=True)

    p = add("ulrich-make", _cmd_ulrich_make, "build an Ulrich bundle from block counts")
    p.add_argument("--a", type=int, required=True, help="number of O(H-f) blocks")
    p.add_argument("--b", type=int, required=True, help="number of O((c-1)f) blocks")

    p = add("ext1", _cmd_ext1, "dimension of Ext^1 between two line bundles")
    p.add_argument("--from", dest="from_", type=_int_pair, required=True, metavar="H,F")
    p.add_argument("--to", type=_int_pair, required=True, metavar="H,F")

    p = add("log", _cmd_log, "splitting type of the log bundle of an arrangement")
    p.add_argument("--lines", type=int, required=True)
    p.add_argument("--curves", type=int, required=True)

    p = add("log-check", _cmd_log_check, "residue-sequence consistency of a claimed splitting")
    p.add_argument("--lines", type=int, required=True)
    p.add_argument("--curves", type=int, required=True)
    p.add_argument("--claimed", metavar="SPEC")
    p.add_argument("--twists", type=_twist_ranges, default=((-4, 4), (-6, 6)), metavar="HMIN:HMAX,FMIN:FMAX")

    p = add("classify-log", _cmd_classify_log, "arrangements with regular ACM log bundles")
    p.add_argument("--max-lines", type=int, required=True)
    p.add_argument("--max-curves", type=int, required=True)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScrollCalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
