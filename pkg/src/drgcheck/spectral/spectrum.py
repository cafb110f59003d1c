from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from ..model import DerivedParameters, IntersectionArray
from . import polynomial as P
from .polynomial import Q
from .algebraic import GRID, AlgebraicNumber, format_exact, grid_decimal

Number = Union[int, Fraction]
Eigenvalue = Union[Fraction, AlgebraicNumber]


class SpectralDefect(RuntimeError):
    """Raised when an exact computation contradicts a structural guarantee."""


@dataclass(frozen=True)
class TridiagonalMatrix:
    diag: tuple[int, ...]   # a_0 .. a_d
    sub: tuple[int, ...]    # c_1 .. c_d
    sup: tuple[int, ...]    # b_0 .. b_{d-1}

    @property
    def order(self) -> int:
        return len(self.diag)

    def rows(self) -> list[list[int]]:
        n = self.order
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            out[i][i] = self.diag[i]
            if i + 1 < n:
                out[i][i + 1] = self.sup[i]
                out[i + 1][i] = self.sub[i]
        return out

    def characteristic_polynomial(self) -> P.Poly:
        """det(xI - L) via the three-term recurrence on leading minors."""
        prev, cur = (1,), (-self.diag[0], 1)
        for i in range(1, self.order):
            nxt = P.sub(P.mul((-self.diag[i], 1), cur),
                        P.scale(prev, self.sup[i - 1] * self.sub[i - 1]))
            prev, cur = cur, nxt
        return cur


def intersection_matrix(arr: IntersectionArray, dp: DerivedParameters) -> TridiagonalMatrix:
    return TridiagonalMatrix(diag=dp.a, sub=arr.c, sup=arr.b)


class RootExpression:
    """The value ``poly(theta)`` for an algebraic eigenvalue ``theta``.

    Multiplicities of irrational eigenvalues are kept in this form: the
    polynomial is reduced modulo the defining polynomial of ``theta``.
    """

    def __init__(self, poly: P.Poly, root: AlgebraicNumber):
        self.poly = poly
        self.root = root

    def enclosure(self, width) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value, at most ``width`` wide."""
        width = Q(width)
        root = self.root
        while True:
            c = (root.lo + root.hi) / 2
            lo, hi = P.centered_enclosure(self.poly, c, root.width / 2)
            if hi - lo <= width:
                return lo, hi
            root = root.refined(root.width / 2**16)

    def _is_exactly(self, q: Fraction) -> bool:
        g = P.poly_gcd(self.root.poly, P.sub(self.poly, (q,)))
        if P.degree(g) < 1:
            return False
        r = self.root
        return P.count_roots(P.sturm_chain(g), r.lo, r.hi) == 1

    def sign(self) -> int:
        if self._is_exactly(Fraction(0)):
            return 0
        width = Q(1)
        while True:
            lo, hi = self.enclosure(width)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            width /= 2**16

    def integer_value(self) -> int | None:
        """The value if it is an integer, else None; decided exactly."""
        width = Q(1, 4)
        checked = None
        while True:
            lo, hi = self.enclosure(width)
            first, last = int(math.ceil(lo)), int(math.floor(hi))
            if first > last:
                return None
            if first == last:
                if checked != first:
                    if self._is_exactly(Fraction(first)):
                        return first
                    checked = first
                # an integer other than the value lies inside: shrink past it
            width /= 2**16

    @cached_property
    def grid_cell(self):
        """Like :meth:`AlgebraicNumber.grid_cell`, for the value of this expression."""
        width = Q(1, GRID * 100)
        while True:
            lo, hi = self.enclosure(width)
            j = int(math.floor(lo * GRID))
            if int(math.ceil(hi * GRID)) == j + 1:
                return j
            g = Fraction(int(math.floor(hi * GRID)), GRID)
            if self._is_exactly(g):
                return g
            width /= 2**16

    def __float__(self) -> float:
        lo, hi = self.enclosure(Q(1, 2**60))
        return float((lo + hi) / 2)

    def __str__(self) -> str:
        cell = self.grid_cell
        if not isinstance(cell, int):
            return format_exact(cell)
        return f"[{grid_decimal(cell)}, {grid_decimal(cell + 1)}]"

    def __repr__(self) -> str:
        return f"RootExpression({P.to_string(self.poly, 't')}, {self.root!r})"


Multiplicity = Union[Fraction, RootExpression]


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (descending) with their multiplicities.

    ``block`` holds (f, M): f is the product of the minimal polynomials of
    the irrational eigenvalues and M(theta) is the multiplicity of each root
    theta of f.  It lets the trace identities be summed exactly.
    """

    eigenvalues: tuple[Eigenvalue, ...]
    multiplicities: tuple[Multiplicity, ...]
    block: tuple[P.Poly, P.Poly] | None = None

    @property
    def theta_min(self) -> Eigenvalue:
        return self.eigenvalues[-1]

    def power_trace(self, j: int) -> Fraction:
        """Exact sum of m_i * theta_i**j."""
        total = Fraction(0)
        for theta, m in zip(self.eigenvalues, self.multiplicities):
            if isinstance(theta, Fraction):
                total += m * theta**j
        if self.block is not None:
            f, M = self.block
            total += P.trace_mod(P.mul(M, P.power((0, 1), j)), f)
        return total

    def is_integral(self) -> bool:
        return all(isinstance(m, Fraction) and m.denominator == 1 for m in self.multiplicities)


def _numeric_roots(m: TridiagonalMatrix, exclude: Sequence[int]) -> list[float]:
    """Float eigenvalues of the symmetrized matrix, less the nearest match to each excluded value."""
    n = m.order
    sym = np.diag(np.array(m.diag, dtype=float))
    off = np.sqrt(np.array(m.sup, dtype=float) * np.array(m.sub, dtype=float))
    sym[np.arange(n - 1), np.arange(1, n)] = off
    sym[np.arange(1, n), np.arange(n - 1)] = off
    approx = list(np.linalg.eigvalsh(sym))
    for r in exclude:
        approx.pop(min(range(len(approx)), key=lambda i: abs(approx[i] - r)))
    return [float(x) for x in approx]


def eigenvalues(m: TridiagonalMatrix) -> tuple[Eigenvalue, ...]:
    """The d+1 distinct eigenvalues, descending, rational ones exact."""
    chi = m.characteristic_polynomial()
    bound = max(abs(x) for x in m.diag) + max(m.sup) + max(m.sub)
    rational = sorted(P.integer_roots(chi, bound))
    rest = chi
    for r in rational:
        rest = P.deflate(rest, r)
    rest = P.primitive(rest)
    algebraic = []
    intervals = None
    if P.degree(rest) > 0:
        intervals = P.certify_isolators(rest, _numeric_roots(m, rational))
    if intervals is None:
        intervals = P.isolate_roots(rest)
    for lo, hi in intervals:
        if lo == hi:
            raise SpectralDefect(f"rational root {lo} missed by the rational-root test")
        algebraic.append(AlgebraicNumber(rest, lo, hi))
    found = [Fraction(r) for r in rational] + algebraic
    if len(found) != m.order:
        raise SpectralDefect(
            f"expected {m.order} distinct real eigenvalues, found {len(found)}"
        )
    return tuple(sorted(found, reverse=True))


def defining_block(eigs: Sequence[Eigenvalue]) -> P.Poly | None:
    for theta in eigs:
        if isinstance(theta, AlgebraicNumber):
            return theta.poly
    return None


def _cosines_at(arr: IntersectionArray, dp: DerivedParameters, theta) -> list[Q]:
    # c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i, with u_0 = 1 and u_1 = theta/b_0
    theta = Q(theta)
    u = [Q(1), theta / arr.b0]
    for i in range(1, arr.d):
        u.append(((theta - dp.a[i]) * u[i] - arr.c[i - 1] * u[i - 1]) / arr.b[i])
    return u[: arr.d + 1]


def _cosines_mod(arr: IntersectionArray, dp: DerivedParameters, f: P.Poly) -> list[P.Poly]:
    """The same recurrence with theta generic, as polynomials reduced mod f."""
    u: list[P.Poly] = [(Q(1),), P.mod((0, Q(1, arr.b0)), f)]
    for i in range(1, arr.d):
        t = P.mul((-dp.a[i], 1), u[i])
        t = P.sub(t, P.scale(u[i - 1], arr.c[i - 1]))
        u.append(P.mod(P.scale(t, Q(1, arr.b[i])), f))
    return u[: arr.d + 1]


def _fraction(q) -> Fraction:
    q = Q(q)
    return Fraction(int(q.numerator), int(q.denominator))


def multiplicities(arr: IntersectionArray, dp: DerivedParameters,
                   eigs: Sequence[Eigenvalue]) -> tuple[Multiplicity, ...]:
    """Multiplicity n / sum_i k_i u_i(theta)^2 of each eigenvalue in ``eigs``.

    Rational eigenvalues are handled in Q.  For irrational ones the sum is
    formed in Q[x]/(f), f their common defining polynomial, and inverted
    there; the resulting value is kept exact as a :class:`RootExpression`
    unless it is decided to be an integer.
    """
    return _multiplicities_with_block(arr, dp, eigs)[0]


def _multiplicities_with_block(arr, dp, eigs):
    f = defining_block(eigs)
    M: P.Poly = ()
    if f is not None:
        S: P.Poly = ()
        for ki, ui in zip(dp.k, _cosines_mod(arr, dp, f)):
            S = P.add(S, P.scale(P.mod(P.mul(ui, ui), f), Q(ki)))
        try:
            M = P.scale(P.inverse_mod(S, f), dp.n)
        except ZeroDivisionError as exc:
            raise SpectralDefect("multiplicity denominator vanishes") from exc

    out: list[Multiplicity] = []
    for theta in eigs:
        if isinstance(theta, Fraction):
            u = _cosines_at(arr, dp, theta)
            denom = sum((Q(ki) * ui * ui for ki, ui in zip(dp.k, u)), Q(0))
            if denom <= 0:
                raise SpectralDefect(f"nonpositive multiplicity denominator at {theta}")
            out.append(_fraction(Q(dp.n) / denom))
        elif P.degree(M) < 1:
            out.append(_fraction(M[0]) if M else Fraction(0))
        else:
            expr = RootExpression(M, theta)
            v = expr.integer_value()
            out.append(Fraction(v) if v is not None else expr)
    return tuple(out), ((f, M) if f is not None else None)


def spectrum(arr: IntersectionArray, dp: DerivedParameters) -> Spectrum:
    eigs = eigenvalues(intersection_matrix(arr, dp))
    mults, block = _multiplicities_with_block(arr, dp, eigs)
    return Spectrum(eigenvalues=eigs, multiplicities=mults, block=block)


def equals_minus_one(theta: Eigenvalue) -> bool:
    """Exact test theta == -1 (guards the Terwilliger denominator)."""
    return theta == -1


def format_eigenvalue(theta: Eigenvalue) -> str:
    return format_exact(theta)
