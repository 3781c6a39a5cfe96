"""Picard-lattice arithmetic on smooth rational normal scroll surfaces.

S(a0,a1), with 0 < a0 <= a1, is the projectivisation of O(a0) + O(a1)
over P^1, embedded in P^(a0+a1+1) by its tautological class.  Throughout
the package a scroll is identified by the pair (a0, a1); its degree is
c = a0 + a1 and its imbalance is e = a1 - a0.

Pic(S(a0,a1)) is free of rank two on the hyperplane class H and the
fibre class f, with intersection numbers

    H.H = c,   H.f = 1,   f.f = 0,

and canonical class K = -2H + (c-2)f.  All computations in this module
are exact integer arithmetic on (h, f) coordinate pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidScroll


@dataclass(frozen=True, order=True)
class DivisorClass:
    """An element h*H + f*f of the Picard lattice Z<H, f>."""

    h: int
    f: int

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h + other.h, self.f + other.f)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.h - other.h, self.f - other.f)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.h, -self.f)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.h * n, self.f * n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"O({self.h},{self.f})"


ZERO = DivisorClass(0, 0)
FIBRE = DivisorClass(0, 1)
HYPERPLANE = DivisorClass(1, 0)


@dataclass(frozen=True)
class Scroll:
    """The surface S(a0, a1).  Construction validates 0 < a0 <= a1."""

    a0: int
    a1: int

    def __post_init__(self) -> None:
        if not (0 < self.a0 <= self.a1):
            raise InvalidScroll(
                f"invalid scroll S({self.a0},{self.a1}): need 0 < a0 <= a1"
            )

    @property
    def c(self) -> int:
        """Degree of the embedded surface."""
        return self.a0 + self.a1

    @property
    def e(self) -> int:
        """Imbalance a1 - a0; the scroll is balanced when e = 0."""
        return self.a1 - self.a0

    @property
    def K(self) -> DivisorClass:
        """Canonical class -2H + (c-2)f."""
        return DivisorClass(-2, self.c - 2)

    def narrow_section(self) -> DivisorClass:
        """The section class H - a1*f of self-intersection -e."""
        return DivisorClass(1, -self.a1)

    def __str__(self) -> str:
        return f"S({self.a0},{self.a1})"


def make_scroll(a0: int, a1: int) -> Scroll:
    """Build a scroll, rejecting parameters outside 0 < a0 <= a1."""
    return Scroll(a0, a1)


def intersect(d1: DivisorClass, d2: DivisorClass, s: Scroll) -> int:
    """Intersection number d1.d2 under H.H = c, H.f = 1, f.f = 0."""
    return d1.h * d2.h * s.c + d1.h * d2.f + d1.f * d2.h


def serre_dual(d: DivisorClass, s: Scroll) -> DivisorClass:
    """The class K - d pairing with d in Serre duality."""
    return s.K - d


def restriction_degree(d: DivisorClass, curve: DivisorClass, s: Scroll) -> int:
    """Degree of O(d) restricted to a curve in the class `curve`.

    For an irreducible curve C the restriction O(d)|_C is a line bundle of
    degree d.C, so this is just the intersection number.  Callers are
    expected to pass an effective curve class (curve.h >= 0, nonzero).
    """
    return intersect(d, curve, s)
