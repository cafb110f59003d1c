"""Real algebraic numbers held as (polynomial, isolating interval)."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Union

from . import polynomial as P
from .polynomial import RATIONAL_TYPES, Q

Exact = Union[int, Fraction, Q, "AlgebraicNumber"]

# Grid used for canonical rendering and hashing; independent of how far an
# isolator happens to have been refined.
GRID = 10**7


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class AlgebraicNumber:
    """The unique root of ``poly`` inside the open interval ``(lo, hi)``.

    ``poly`` has integer coefficients and no root at either endpoint.  A
    degenerate interval ``lo == hi`` means the value is the rational ``lo``.
    Instances are immutable; :meth:`refined` returns a new, narrower one.
    """

    __slots__ = ("poly", "lo", "hi", "_slo")

    def __init__(self, poly, lo, hi):
        self.poly = P.primitive(P.trim(poly))
        self.lo = Q(lo)
        self.hi = Q(hi)
        if self.lo > self.hi:
            raise ValueError("empty isolating interval")
        self._slo = P.sign_at(self.poly, self.lo)
        if self.lo < self.hi:
            shi = P.sign_at(self.poly, self.hi)
            if self._slo == 0 or shi == 0 or self._slo == shi:
                raise ValueError(f"({self.lo}, {self.hi}) does not isolate a simple root")
        elif self._slo != 0:
            raise ValueError(f"{self.lo} is not a root")

    def __reduce__(self):
        return (AlgebraicNumber, (self.poly, self.lo, self.hi))

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self):
        return self.hi - self.lo

    def _bisect(self, lo, hi):
        mid = (lo + hi) / 2
        s = P.sign_at(self.poly, mid)
        if s == 0:
            return mid, mid
        return (lo, mid) if s != self._slo else (mid, hi)

    def refined(self, width) -> "AlgebraicNumber":
        """Copy whose isolating interval is no wider than ``width``."""
        lo, hi = self.lo, self.hi
        width = Q(width)
        while hi - lo > width:
            lo, hi = self._bisect(lo, hi)
        if lo == self.lo and hi == self.hi:
            return self
        return AlgebraicNumber(self.poly, lo, hi)

    # --- exact comparison -------------------------------------------------

    def _cmp_rational(self, q) -> int:
        if self.is_rational:
            return _sign(self.lo - q)
        if q <= self.lo:
            return 1
        if q >= self.hi:
            return -1
        s = P.sign_at(self.poly, q)
        if s == 0:
            return 0
        # the root sits between lo and q exactly when the sign flips there
        return -1 if s != self._slo else 1

    def compare(self, other: Exact) -> int:
        if not isinstance(other, AlgebraicNumber):
            return self._cmp_rational(Q(other))
        if other.is_rational:
            return self._cmp_rational(other.lo)
        if self.is_rational:
            return -other._cmp_rational(self.lo)
        a, b = self, other
        g = P.poly_gcd(a.poly, b.poly)
        if P.degree(g) >= 1:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            # endpoints are non-roots of one of the two polys, hence of g
            if lo < hi and P.count_roots(P.sturm_chain(g), lo, hi) == 1:
                return 0
        while True:
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            a = a.refined(a.width / 2)
            b = b.refined(b.width / 2)
            if a.is_rational or b.is_rational:
                return a.compare(b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RATIONAL_TYPES + (AlgebraicNumber,)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other) -> bool:
        if not isinstance(other, RATIONAL_TYPES + (AlgebraicNumber,)):
            return NotImplemented
        return self.compare(other) < 0

    def __hash__(self) -> int:
        cell = self.grid_cell()
        return hash(cell if self.is_rational or not isinstance(cell, int) else ("cell", cell))

    def sign(self) -> int:
        return self._cmp_rational(Q(0))

    # --- arithmetic needed by the feasibility chain ------------------------

    def mobius(self, alpha, beta, gamma, delta) -> Exact:
        """(alpha*x + beta) / (gamma*x + delta), computed exactly."""
        if self.is_rational:
            x = self.lo
            return (alpha * x + beta) / (gamma * x + delta)
        me = self
        if gamma:
            pole = Q(-delta) / gamma
            if me.compare(pole) == 0:
                raise ZeroDivisionError("mobius pole at this value")
            while me.lo <= pole <= me.hi:
                me = me.refined(me.width / 2)

        def f(t):
            return (alpha * t + beta) / (gamma * t + delta)

        ends = sorted((f(me.lo), f(me.hi)))
        poly = P.substitute_mobius(me.poly, alpha, beta, gamma, delta)
        return AlgebraicNumber(poly, ends[0], ends[1])

    def __float__(self) -> float:
        a = self.refined(Q(1, 2**60) * max(1, abs(self.lo)))
        return float((a.lo + a.hi) / 2)

    # --- canonical rendering ----------------------------------------------

    def grid_cell(self):
        """Exact value if rational, else the integer j with j/GRID < x < (j+1)/GRID."""
        if self.is_rational:
            return self.lo
        lo_j = int(math.floor(self.lo * GRID))
        hi_j = int(math.ceil(self.hi * GRID))
        while hi_j - lo_j > 1:
            mid = (lo_j + hi_j) // 2
            c = self._cmp_rational(Q(mid, GRID))
            if c == 0:
                return Q(mid, GRID)
            if c > 0:
                lo_j = mid
            else:
                hi_j = mid
        return lo_j

    def interval_string(self) -> str:
        cell = self.grid_cell()
        if not isinstance(cell, int):
            return format_exact(cell)
        return f"[{grid_decimal(cell)}, {grid_decimal(cell + 1)}]"

    def minimal_polynomial(self) -> tuple:
        """Irreducible integer factor of ``poly`` that vanishes at this value."""
        if self.is_rational:
            return P.primitive((-self.lo, 1))
        from .factor import minimal_polynomial

        return minimal_polynomial(self.poly, self.lo, self.hi)

    def __str__(self) -> str:
        if self.is_rational:
            return format_exact(self.lo)
        return f"{self.interval_string()} root of {P.to_string(self.minimal_polynomial())}"

    def __repr__(self) -> str:
        return f"AlgebraicNumber({P.to_string(self.poly)}, {self.lo}, {self.hi})"


def grid_decimal(j: int) -> str:
    sign = "-" if j < 0 else ""
    q, r = divmod(abs(j), GRID)
    return f"{sign}{q}.{r:07d}"


def format_exact(x) -> str:
    """Render an exact value: integers plainly, rationals as p/q."""
    if isinstance(x, RATIONAL_TYPES):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)
