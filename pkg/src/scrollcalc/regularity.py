"""Castelnuovo-Mumford style regularity adapted to the scroll's ruling.

A bundle F is (p,p')-regular when, writing E = F(pH + p'f),

    h^2(E(-H + (c-2)f)) = 0,
    h^1(E(-H + (c-1)f)) = 0,
    h^1(E(-f)) = 0.

Reg(F) is the least p making F (p,0)-regular.  For a single line bundle
O(aH + bf) the three probes collapse to the closed region

    regular  iff  a >= 0 and b >= -a*a0,

whence Reg(O(aH+bf)) = max(-a, ceil(-b/a0) - a); a direct sum is regular
exactly when each summand is, so for Sum inputs the search window is a
single point.  For extension classes the probes are interval valued and
the verdict may be indeterminate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyBundle
from .extensions import (
    BundleExpr,
    Ext,
    Probe,
    Sum,
    Verdict,
    as_bundle_expr,
    extension_cohomology,
)
from .scroll import DivisorClass, Scroll


def _probe_plan(s: Scroll) -> tuple[tuple[str, DivisorClass, int], ...]:
    return (
        ("h2(E(-H+(c-2)f))", DivisorClass(-1, s.c - 2), 2),
        ("h1(E(-H+(c-1)f))", DivisorClass(-1, s.c - 1), 1),
        ("h1(E(-f))", DivisorClass(0, -1), 1),
    )


@dataclass(frozen=True)
class RegularityReport:
    """Verdict plus the three probe evaluations that produced it."""

    verdict: Verdict
    witnesses: tuple[Probe, ...]

    def failing(self) -> tuple[Probe, ...]:
        return tuple(p for p in self.witnesses if p.lo > 0)


def is_pp_regular(s: Scroll, b, p: int = 0, pp: int = 0) -> RegularityReport:
    """Run the three-probe regularity test on b(pH + p'f).

    TRUE needs every probe forced to zero; FALSE needs some probe with a
    positive lower bound; anything else is INDETERMINATE.  Sum inputs
    always resolve one way or the other.
    """
    b = as_bundle_expr(b)
    base = DivisorClass(p, pp)
    probes = []
    for name, shift, degree in _probe_plan(s):
        tw = base + shift
        iv = extension_cohomology(s, b, tw)
        probes.append(Probe(name, tw, iv.lo(degree), iv.hi(degree)))
    if any(pr.lo > 0 for pr in probes):
        verdict = Verdict.FALSE
    elif all(pr.hi == 0 for pr in probes):
        verdict = Verdict.TRUE
    else:
        verdict = Verdict.INDETERMINATE
    return RegularityReport(verdict, tuple(probes))


def is_regular(s: Scroll, b) -> RegularityReport:
    """Regularity at the origin, p = p' = 0."""
    return is_pp_regular(s, b, 0, 0)


def regular_region(s: Scroll, d: DivisorClass) -> bool:
    """Closed form: O(aH+bf) is regular iff a >= 0 and b >= -a*a0."""
    return d.h >= 0 and d.f >= -d.h * s.a0


def gg_region(s: Scroll, d: DivisorClass) -> bool:
    """Global generation region: a >= 0 and a*a0 + b >= 0.

    Equivalently every degree in the direct image on P^1 is >= 0.
    """
    return d.h >= 0 and d.h * s.a0 + d.f >= 0


def line_bundle_reg(s: Scroll, d: DivisorClass) -> int:
    """Reg of a single line bundle in closed form."""
    # ceil(-b/a0) written with floor division
    return max(-d.h, -(d.f // s.a0) - d.h)


def _reg_window(s: Scroll, b: BundleExpr) -> tuple[int, int]:
    if isinstance(b, Sum):
        r = max(line_bundle_reg(s, d) for d in b.leaves())
        return (r, r)
    assert isinstance(b, Ext)
    sub_lo, sub_hi = _reg_window(s, b.sub)
    quot_lo, quot_hi = _reg_window(s, b.quot)
    return (min(sub_lo, quot_lo) - 1, max(sub_hi, quot_hi) + 1)


def reg(s: Scroll, b) -> int | Verdict:
    """Least p with is_pp_regular(s, b, p, 0) TRUE.

    Searches upward from a window derived leafwise (closed form for
    sums, the union of the sub/quot windows widened by 1 for extension
    classes).  Returns Verdict.INDETERMINATE when an unresolved probe
    below the first certified-regular twist prevents naming the least p;
    a definite failure resets that uncertainty, since regularity is
    monotone in p for every member of the class.
    """
    b = as_bundle_expr(b)
    if b.rank() == 0:
        raise EmptyBundle("Reg of the zero bundle is not defined")
    lo, hi = _reg_window(s, b)
    pending_unknown = False
    for p in range(lo, hi + 1):
        report = is_pp_regular(s, b, p, 0)
        if report.verdict is Verdict.TRUE:
            return Verdict.INDETERMINATE if pending_unknown else p
        if report.verdict is Verdict.FALSE:
            pending_unknown = False
        else:
            pending_unknown = True
    raise AssertionError("regularity search window failed to close")
