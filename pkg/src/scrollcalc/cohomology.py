"""Exact cohomology of line bundles and their direct sums on a scroll.

Every computation reduces to the base P^1 through three branches:

* h-coefficient >= 0: push forward along the ruling and read cohomology
  off the Sym decomposition,
* h-coefficient = -1: the bundle has no cohomology at all,
* h-coefficient <= -2: relative duality sends O(aH+bf) to the case
  Sym^(-a-2) twisted by c-b-2, with the outer degrees swapped.

The degree swap in the last branch (X-degree i reads off P^1-degree 2-i)
lives in `line_cohomology` and nowhere else; every consumer in the
package goes through this one function.

`euler_rr` is an independent oracle: it computes the Euler characteristic
from the intersection form alone, chi(D) = 1 + D.(D-K)/2, and never
touches the direct-image route.  The test suite insists the two agree
before anything downstream is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import OddIntersection, UnsupportedCurveClass
from .p1 import P1Sum, p1_cohomology, sym_decompose
from .scroll import ZERO, DivisorClass, Scroll, intersect, restriction_degree


@dataclass(frozen=True)
class CohomRecord:
    """Exact dimensions (h^0, h^1, h^2); chi is derived, never stored."""

    h0: int
    h1: int
    h2: int

    def __post_init__(self) -> None:
        if min(self.h0, self.h1, self.h2) < 0:
            raise ValueError("cohomology dimensions must be nonnegative")

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)

    def __getitem__(self, i: int) -> int:
        return self.as_tuple()[i]


@dataclass(frozen=True)
class LineBundleSum:
    """A finite multiset of divisor classes, stored sorted by (h, f)."""

    summands: tuple[DivisorClass, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @property
    def rank(self) -> int:
        return len(self.summands)

    def twist(self, t: DivisorClass) -> "LineBundleSum":
        return LineBundleSum(tuple(d + t for d in self.summands))

    def c1(self) -> DivisorClass:
        out = ZERO
        for d in self.summands:
            out = out + d
        return out

    def __iter__(self):
        return iter(self.summands)


@lru_cache(maxsize=None)
def _line_cohomology(a0: int, a1: int, h: int, f: int) -> CohomRecord:
    s = Scroll(a0, a1)
    if h >= 0:
        p0, p1 = p1_cohomology(sym_decompose(s, h, f))
        return CohomRecord(p0, p1, 0)
    if h == -1:
        return CohomRecord(0, 0, 0)
    # duality branch: X-degree i equals P^1-degree 2-i of the dual data
    p0, p1 = p1_cohomology(sym_decompose(s, -h - 2, s.c - f - 2))
    return CohomRecord(0, p1, p0)


def line_cohomology(s: Scroll, d: DivisorClass) -> CohomRecord:
    """Exact (h^0, h^1, h^2) of O(d.h H + d.f f) on the scroll."""
    return _line_cohomology(s.a0, s.a1, d.h, d.f)


def sum_cohomology(s: Scroll, b: LineBundleSum, twist: DivisorClass = ZERO) -> CohomRecord:
    """Componentwise cohomology of a twisted direct sum of line bundles."""
    h0 = h1 = h2 = 0
    for d in b:
        rec = line_cohomology(s, d + twist)
        h0 += rec.h0
        h1 += rec.h1
        h2 += rec.h2
    return CohomRecord(h0, h1, h2)


def euler_rr(s: Scroll, d: DivisorClass) -> int:
    """chi(O(d)) = 1 + d.(d - K)/2, straight from the intersection form."""
    prod = intersect(d, d - s.K, s)
    if prod % 2:
        # adjunction forces D.(D-K) even; reaching here means the lattice
        # data is corrupt, not that the input is unusual
        raise OddIntersection(f"D.(D-K) = {prod} is odd for D = {d} on {s}")
    return 1 + prod // 2


def h1_nonvanishing(s: Scroll, d: DivisorClass) -> bool:
    """Whether h^1(O(d)) > 0, decided without building the Sym multiset.

    Only the minimal degree in the direct image matters:

    * d.h >= 0:  h^1 > 0  iff  d.h*a0 + d.f <= -2,
    * d.h = -1:  never,
    * d.h <= -2: h^1 > 0  iff  d.f >= (-d.h - 2)*a0 + c.
    """
    if d.h >= 0:
        return d.h * s.a0 + d.f <= -2
    if d.h == -1:
        return False
    return d.f >= (-d.h - 2) * s.a0 + s.c


def h1_violating_h_twists(s: Scroll, d: DivisorClass) -> tuple[tuple[int, int], ...]:
    """Closed intervals of t with h^1(O((d.h + t)H + d.f f)) != 0.

    Each branch of `h1_nonvanishing` contributes at most one finite
    interval, so conditions of the shape "h^1 vanishes for every twist
    t" reduce to finitely many explicit checks.
    """
    out = []
    top = (-2 - d.f) // s.a0 - d.h
    if top >= -d.h:
        out.append((-d.h, top))
    if d.f >= s.c:
        out.append((-d.h - 2 - (d.f - s.c) // s.a0, -d.h - 2))
    return tuple(out)


def restricted_cohomology(
    s: Scroll, b: LineBundleSum, curve: DivisorClass, twist: DivisorClass = ZERO
) -> tuple[int, int]:
    """(h^0, h^1) of (b (x) twist) restricted to a rational curve on s.

    Supported curve classes: the fibre (0,1), the hyperplane section
    (1,0) and the narrow section (1,-a1).  All three are smooth rational,
    so the restriction is a sum of line bundles on P^1 with degrees given
    by the intersection pairing.
    """
    allowed = (DivisorClass(0, 1), DivisorClass(1, 0), DivisorClass(1, -s.a1))
    if curve not in allowed:
        raise UnsupportedCurveClass(
            f"restriction to {curve} is not supported on {s}; "
            f"choose one of {', '.join(str(a) for a in allowed)}"
        )
    degrees = P1Sum(tuple(restriction_degree(d + twist, curve, s) for d in b))
    return p1_cohomology(degrees)
