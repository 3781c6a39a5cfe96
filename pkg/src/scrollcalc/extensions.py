"""Bundles presented as iterated extensions of line-bundle sums.

An `Ext(sub, quot)` node stands for the whole class of bundles E sitting
in 0 -> sub -> E -> quot -> 0, with no genericity assumption on the
extension class.  Cohomology of such a node is therefore interval
valued: the long exact sequence gives

    hi_i = hi_i(sub) + hi_i(quot)
    lo_i = max(lo_i(sub) - hi_{i-1}(quot), 0)
         + max(lo_i(quot) - hi_{i+1}(sub), 0)

per degree (out-of-range degrees count as zero).  The two clamped terms
bound the image of H^i(sub) and the part surjecting onto H^i(quot)
separately, so in particular a degree is forced exact whenever both
flanking groups vanish.  Euler characteristics are exact and additive
regardless of the class.

Predicates built on these intervals return a three-valued `Verdict`;
`INDETERMINATE` is an ordinary outcome, not an error.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cohomology import LineBundleSum, line_cohomology, sum_cohomology
from .scroll import ZERO, DivisorClass, Scroll


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"


INDETERMINATE = Verdict.INDETERMINATE


@dataclass(frozen=True)
class Probe:
    """One evaluated cohomology test: a named twist with an [lo, hi] value."""

    name: str
    twist: DivisorClass
    lo: int
    hi: int

    @property
    def forced(self) -> bool:
        return self.lo == self.hi

    def describe(self) -> str:
        value = str(self.lo) if self.forced else f"[{self.lo},{self.hi}]"
        return f"{self.name} at twist {self.twist} = {value}"


class BundleExpr:
    """Base class: a direct sum of line bundles or an extension class."""

    def rank(self) -> int:
        raise NotImplementedError

    def leaves(self) -> tuple[DivisorClass, ...]:
        raise NotImplementedError


@dataclass(frozen=True)
class Sum(BundleExpr):
    bundle: LineBundleSum

    def rank(self) -> int:
        return self.bundle.rank

    def leaves(self) -> tuple[DivisorClass, ...]:
        return self.bundle.summands


@dataclass(frozen=True)
class Ext(BundleExpr):
    sub: BundleExpr
    quot: BundleExpr

    def rank(self) -> int:
        return self.sub.rank() + self.quot.rank()

    def leaves(self) -> tuple[DivisorClass, ...]:
        return self.sub.leaves() + self.quot.leaves()


def line_bundle(h: int, f: int) -> Sum:
    return Sum(LineBundleSum((DivisorClass(h, f),)))


def bundle_sum(*divisors: DivisorClass) -> Sum:
    return Sum(LineBundleSum(tuple(divisors)))


def as_bundle_expr(x) -> BundleExpr:
    """Coerce a DivisorClass or LineBundleSum into a BundleExpr."""
    if isinstance(x, BundleExpr):
        return x
    if isinstance(x, LineBundleSum):
        return Sum(x)
    if isinstance(x, DivisorClass):
        return Sum(LineBundleSum((x,)))
    raise TypeError(f"cannot interpret {x!r} as a bundle expression")


@dataclass(frozen=True)
class IntervalCohom:
    """Per-degree bounds lo_i <= h^i <= hi_i together with the exact chi."""

    lo0: int
    hi0: int
    lo1: int
    hi1: int
    lo2: int
    hi2: int
    chi: int

    def __post_init__(self) -> None:
        for i in range(3):
            if not 0 <= self.lo(i) <= self.hi(i):
                raise ValueError(f"degree {i}: need 0 <= lo <= hi")
        if not (self.lo0 - self.hi1 + self.lo2 <= self.chi <= self.hi0 - self.lo1 + self.hi2):
            raise ValueError("chi falls outside the interval alternating sum")

    @classmethod
    def exact(cls, h0: int, h1: int, h2: int) -> "IntervalCohom":
        return cls(h0, h0, h1, h1, h2, h2, h0 - h1 + h2)

    def lo(self, i: int) -> int:
        return (self.lo0, self.lo1, self.lo2)[i] if 0 <= i <= 2 else 0

    def hi(self, i: int) -> int:
        return (self.hi0, self.hi1, self.hi2)[i] if 0 <= i <= 2 else 0

    @property
    def forced(self) -> bool:
        return all(self.lo(i) == self.hi(i) for i in range(3))

    def forced_at(self, i: int) -> bool:
        return self.lo(i) == self.hi(i)

    def as_record_tuple(self) -> tuple[int, int, int]:
        """The exact dimensions; only meaningful when forced."""
        if not self.forced:
            raise ValueError("interval is not forced; no exact record exists")
        return (self.lo0, self.lo1, self.lo2)


def extension_cohomology(s: Scroll, b, twist: DivisorClass = ZERO) -> IntervalCohom:
    """Interval cohomology of a bundle expression twisted by `twist`.

    Sums evaluate exactly; Ext nodes combine the sub and quotient
    intervals through the long exact sequence bounds above.
    """
    b = as_bundle_expr(b)
    if isinstance(b, Sum):
        rec = sum_cohomology(s, b.bundle, twist)
        return IntervalCohom.exact(rec.h0, rec.h1, rec.h2)
    sub = extension_cohomology(s, b.sub, twist)
    quot = extension_cohomology(s, b.quot, twist)
    bounds = []
    for i in range(3):
        hi = sub.hi(i) + quot.hi(i)
        lo = max(sub.lo(i) - quot.hi(i - 1), 0) + max(quot.lo(i) - sub.hi(i + 1), 0)
        bounds.extend((lo, hi))
    return IntervalCohom(*bounds, chi=sub.chi + quot.chi)


def ext1_dim(s: Scroll, from_: DivisorClass, to: DivisorClass) -> int:
    """dim Ext^1(O(from_), O(to)) = h^1(O(to - from_))."""
    return line_cohomology(s, to - from_).h1


def forced_split(s: Scroll, b: BundleExpr) -> bool:
    """True when every extension class in the expression must vanish.

    Checked leafwise: if Ext^1 between each quotient leaf and each sub
    leaf is zero at every node, the only member of the class is the
    direct sum of the leaves.
    """
    if isinstance(b, Sum):
        return True
    if not (forced_split(s, b.sub) and forced_split(s, b.quot)):
        return False
    return all(
        ext1_dim(s, q, t) == 0
        for q in b.quot.leaves()
        for t in b.sub.leaves()
    )
