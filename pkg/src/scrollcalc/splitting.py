"""Splitting criteria, ACM and Ulrich tests, and Ulrich construction.

Two cohomological splitting criteria are decided exactly:

* h-twist criterion: E is a direct sum of O(t_i H) iff
  h^1(E(tH + (c-1)f)) = h^1(E(tH - f)) = 0 for every integer t;

* three-type criterion: E is a direct sum of twists t_i H of the three
  bundles O, O(f), O(H - f) iff for every integer t
  h^1(E(tH)) = h^1(E(tH + (a0-1)f)) = h^1(E(tH + (a1-1)f))
             = h^1(E(tH + (c-2)f)) = 0.

Although each condition quantifies over all twists, the h^1 nonvanishing
region of a line bundle meets any ray of h-twists in at most two finite
intervals, so only finitely many t ever need checking; outside the union
of the leaf intervals every upper bound is already zero.

The remaining operations: ACM means h^1(E(tH)) = 0 for every t; Ulrich
means all six of h^i(E(-H)) = h^i(E(-2H)) = 0; `make_ulrich` assembles
Ulrich bundles of any splitting-rank pair (a, b) as extension classes of
O((c-1)f)^b by O(H-f)^a; `detect_line_summand` reads a distinguished
direct summand off the way E(-H) fails regularity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import LineBundleSum, h1_violating_h_twists
from .errors import EmptyBundle, NegativeCount, NotRegular
from .extensions import (
    BundleExpr,
    Ext,
    Probe,
    Sum,
    Verdict,
    as_bundle_expr,
    bundle_sum,
    extension_cohomology,
    forced_split,
)
from .regularity import is_regular
from .scroll import DivisorClass, Scroll


@dataclass(frozen=True)
class FailureWitness:
    """A twist where a required h^1 is provably nonzero."""

    condition: str
    t: int
    value: int  # exact for Sum inputs, a lower bound for Ext inputs


@dataclass(frozen=True)
class SplitVerdict:
    outcome: Verdict  # TRUE = splits, FALSE = fails
    witness: LineBundleSum | None = None
    failure: FailureWitness | None = None
    probes: tuple[Probe, ...] = ()
    note: str = ""


@dataclass(frozen=True)
class AcmVerdict:
    verdict: Verdict
    witness_t: int | None = None
    witness_value: int | None = None
    probes: tuple[Probe, ...] = ()


@dataclass(frozen=True)
class UlrichVerdict:
    verdict: Verdict
    witness: Probe | None = None
    probes: tuple[Probe, ...] = ()


@dataclass(frozen=True)
class SummandVerdict:
    """TRUE carries the summand found; FALSE means no cause fired."""

    verdict: Verdict
    summand: DivisorClass | None = None
    witness: Probe | None = None
    probes: tuple[Probe, ...] = ()


def th_families(s: Scroll) -> tuple[tuple[str, int], ...]:
    """The two f-offsets probed by the h-twist criterion."""
    return (
        ("h1(E(tH+(c-1)f))", s.c - 1),
        ("h1(E(tH-f))", -1),
    )


def acm3_families(s: Scroll) -> tuple[tuple[str, int], ...]:
    """The four f-offsets probed by the three-type criterion."""
    return (
        ("h1(E(tH))", 0),
        ("h1(E(tH+(a0-1)f))", s.a0 - 1),
        ("h1(E(tH+(a1-1)f))", s.a1 - 1),
        ("h1(E(tH+(c-2)f))", s.c - 2),
    )


def violating_twists(s: Scroll, b: BundleExpr, offset: int) -> tuple[int, ...]:
    """Sorted t where some leaf of b has h^1(leaf(tH + offset*f)) != 0.

    For a Sum this is exactly the violating set (h^1 is additive, no
    cancellation); for an Ext it is the support of the upper bound, so
    nothing outside it can ever be nonzero.
    """
    ts: set[int] = set()
    shift = DivisorClass(0, offset)
    for d in b.leaves():
        for lo, hi in h1_violating_h_twists(s, d + shift):
            ts.update(range(lo, hi + 1))
    return tuple(sorted(ts))


def _scan_families(
    s: Scroll, b: BundleExpr, families: tuple[tuple[str, int], ...]
) -> tuple[FailureWitness | None, tuple[Probe, ...]]:
    """First definite failure (family-major, t ascending) and any
    unresolved probes encountered along the way."""
    unresolved = []
    for name, offset in families:
        for t in violating_twists(s, b, offset):
            iv = extension_cohomology(s, b, DivisorClass(t, offset))
            if iv.lo(1) > 0:
                return FailureWitness(name, t, iv.lo(1)), ()
            if iv.hi(1) > 0:
                unresolved.append(Probe(name, DivisorClass(t, offset), iv.lo(1), iv.hi(1)))
    return None, tuple(unresolved)


def _decide(s: Scroll, b, families) -> SplitVerdict:
    b = as_bundle_expr(b)
    if b.rank() == 0:
        raise EmptyBundle("splitting criteria need a bundle of positive rank")
    failure, unresolved = _scan_families(s, b, families)
    if failure is not None:
        return SplitVerdict(Verdict.FALSE, failure=failure)
    if unresolved:
        return SplitVerdict(Verdict.INDETERMINATE, probes=unresolved)
    # conditions hold for every member of the class; the summand multiset
    # is the leaf multiset exactly when no extension class can be nonzero
    if forced_split(s, b):
        return SplitVerdict(Verdict.TRUE, witness=LineBundleSum(b.leaves()))
    return SplitVerdict(
        Verdict.INDETERMINATE,
        note="every member splits, but the summand multiset depends on the extension class",
    )


def decide_split_tH(s: Scroll, b) -> SplitVerdict:
    """Decide whether b is a direct sum of h-twists O(t_i H)."""
    return _decide(s, b, th_families(s))


def decide_split_acm3(s: Scroll, b) -> SplitVerdict:
    """Decide whether b is a sum of h-twists of O, O(f) and O(H-f)."""
    return _decide(s, b, acm3_families(s))


def is_acm(s: Scroll, b) -> AcmVerdict:
    """Whether h^1(b(tH)) vanishes for every integer t."""
    b = as_bundle_expr(b)
    if b.rank() == 0:
        raise EmptyBundle("the ACM test needs a bundle of positive rank")
    failure, unresolved = _scan_families(s, b, (("h1(E(tH))", 0),))
    if failure is not None:
        return AcmVerdict(Verdict.FALSE, witness_t=failure.t, witness_value=failure.value)
    if unresolved:
        return AcmVerdict(Verdict.INDETERMINATE, probes=unresolved)
    return AcmVerdict(Verdict.TRUE)


def _ulrich_probe_plan() -> tuple[tuple[str, DivisorClass, int], ...]:
    plan = []
    for k, label in ((-1, "-H"), (-2, "-2H")):
        for i in range(3):
            plan.append((f"h{i}(E({label}))", DivisorClass(k, 0), i))
    return tuple(plan)


def is_ulrich(s: Scroll, b) -> UlrichVerdict:
    """Whether all of h^i(b(-H)) and h^i(b(-2H)) vanish, i = 0, 1, 2."""
    b = as_bundle_expr(b)
    if b.rank() == 0:
        raise EmptyBundle("the Ulrich test needs a bundle of positive rank")
    probes = []
    for name, tw, degree in _ulrich_probe_plan():
        iv = extension_cohomology(s, b, tw)
        probes.append(Probe(name, tw, iv.lo(degree), iv.hi(degree)))
    for pr in probes:
        if pr.lo > 0:
            return UlrichVerdict(Verdict.FALSE, witness=pr, probes=tuple(probes))
    if all(pr.hi == 0 for pr in probes):
        return UlrichVerdict(Verdict.TRUE, probes=tuple(probes))
    unresolved = tuple(pr for pr in probes if pr.hi > pr.lo)
    return UlrichVerdict(Verdict.INDETERMINATE, probes=unresolved)


def make_ulrich(s: Scroll, a: int, b: int) -> BundleExpr:
    """An Ulrich bundle with a summands of type O(H-f) and b of O((c-1)f).

    For a, b both positive the result is the extension class
    Ext(O(H-f)^a, O((c-1)f)^b); all Ulrich and regularity probes of the
    class are forced, so every member qualifies.
    """
    if a < 0 or b < 0:
        raise NegativeCount("Ulrich building-block counts must be >= 0")
    if a == 0 and b == 0:
        raise EmptyBundle("an Ulrich bundle has positive rank; need a + b >= 1")
    sub = bundle_sum(*([DivisorClass(1, -1)] * a))
    quot = bundle_sum(*([DivisorClass(0, s.c - 1)] * b))
    if a == 0:
        return quot
    if b == 0:
        return sub
    return Ext(sub, quot)


def _summand_cases(s: Scroll) -> tuple[tuple[str, DivisorClass, int, DivisorClass, tuple], ...]:
    # each case: cause probe, its degree, the summand it certifies, and
    # the auxiliary vanishings needed for the certification to go through
    return (
        (
            "h2(E(-2H+(c-2)f))",
            DivisorClass(-2, s.c - 2),
            2,
            DivisorClass(0, 0),
            (),
        ),
        (
            "h1(E(-2H+(c-1)f))",
            DivisorClass(-2, s.c - 1),
            1,
            DivisorClass(0, 1),
            (
                ("h1(E(-H+(a0-1)f))", DivisorClass(-1, s.a0 - 1), 1),
                ("h1(E(-H+(a1-1)f))", DivisorClass(-1, s.a1 - 1), 1),
                ("h1(E(-2H+(c-2)f))", DivisorClass(-2, s.c - 2), 1),
            ),
        ),
        (
            "h1(E(-H-f))",
            DivisorClass(-1, -1),
            1,
            DivisorClass(1, -1),
            (
                ("h1(E(-H))", DivisorClass(-1, 0), 1),
                ("h1(E(-2H+(a1-1)f))", DivisorClass(-2, s.a1 - 1), 1),
                ("h1(E(-2H+(a0-1)f))", DivisorClass(-2, s.a0 - 1), 1),
            ),
        ),
    )


def detect_line_summand(s: Scroll, b) -> SummandVerdict:
    """Find a distinguished line summand of a regular bundle.

    The probes are the three ways b(-H) can fail the regularity test;
    each failing cause, together with its auxiliary vanishings, certifies
    a summand: the first cause gives O, the second O(f), the third
    O(H-f).  Cases are checked in that order and the first conclusive
    one wins.  A FALSE verdict means no cause fires, i.e. b(-H) is still
    regular.  Raises NotRegular unless the input is certified regular.
    """
    b = as_bundle_expr(b)
    report = is_regular(s, b)
    if report.verdict is not Verdict.TRUE:
        state = "fails" if report.verdict is Verdict.FALSE else "cannot be certified"
        raise NotRegular(f"summand detection needs a regular input; regularity {state}")
    inconclusive: list[Probe] = []
    for name, tw, degree, summand, auxiliaries in _summand_cases(s):
        iv = extension_cohomology(s, b, tw)
        cause = Probe(name, tw, iv.lo(degree), iv.hi(degree))
        if cause.hi == 0:
            continue  # this cause is definitely absent
        if cause.lo == 0:
            inconclusive.append(cause)
            continue  # cannot tell whether the cause fires
        aux_probes = []
        for aux_name, aux_tw, aux_degree in auxiliaries:
            aux_iv = extension_cohomology(s, b, aux_tw)
            aux_probes.append(Probe(aux_name, aux_tw, aux_iv.lo(aux_degree), aux_iv.hi(aux_degree)))
        if all(pr.hi == 0 for pr in aux_probes):
            return SummandVerdict(Verdict.TRUE, summand=summand, witness=cause, probes=tuple(aux_probes))
        inconclusive.append(cause)
        inconclusive.extend(pr for pr in aux_probes if pr.hi > 0)
    if inconclusive:
        return SummandVerdict(Verdict.INDETERMINATE, probes=tuple(inconclusive))
    return SummandVerdict(Verdict.FALSE)
