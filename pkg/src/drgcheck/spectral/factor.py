"""Factoring integer polynomials whose roots are all real.

Candidate factors are products of root subsets; which subset sizes can
possibly give an integer factor is first narrowed by distinct-degree
factorization modulo a few primes, so irreducible inputs are usually
certified without any subset search.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from . import polynomial as P
from .polynomial import Q

_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)


def _trim_p(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_p(a, b, p):
    a = [x % p for x in a]
    _trim_p(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) > db:
        coef = a[-1] * inv % p
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - coef * bj) % p
        _trim_p(a)
    return a


def _mulmod_p(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod_p(out, m, p)


def _powmod_p(base, e, m, p):
    result, base = [1], _mod_p(base, m, p)
    while e:
        if e & 1:
            result = _mulmod_p(result, base, m, p)
        base = _mulmod_p(base, base, m, p)
        e >>= 1
    return result


def _gcd_p(a, b, p):
    a, b = _trim_p([x % p for x in a]), _trim_p([x % p for x in b])
    while b:
        a, b = b, _mod_p(a, b, p)
    return a


def _sub_p(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim_p(out)


def _divide_p(a, b, p):
    a = [x % p for x in a]
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        coef = a[i] * inv % p
        quot[i - db] = coef
        for j, bj in enumerate(b):
            a[i - db + j] = (a[i - db + j] - coef * bj) % p
    return _trim_p(quot)


def _ddf_degrees(f, p) -> list[int] | None:
    """Degrees of the irreducible factors of f mod p, or None if p is unsuitable."""
    f = [x % p for x in f]
    if len(f) != len(_trim_p(list(f))) or f[-1] == 0:
        return None
    deriv = [(i * f[i]) % p for i in range(1, len(f))]
    if len(_gcd_p(f, deriv, p)) != 1:
        return None  # not square-free mod p
    degrees = []
    rest = f
    h = [0, 1]
    i = 0
    while len(rest) - 1 >= 2 * (i + 1):
        i += 1
        h = _powmod_p(h, p, rest, p)
        g = _gcd_p(rest, _sub_p(h, [0, 1], p), p)
        k = len(g) - 1
        if k > 0:
            degrees += [i] * (k // i)
            rest = _divide_p(rest, g, p)
            h = _mod_p(h, rest, p)
    if len(rest) - 1 > 0:
        degrees.append(len(rest) - 1)
    return degrees


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def possible_factor_degrees(f: P.Poly) -> set[int]:
    """Degrees an integer factor of square-free integer ``f`` could have."""
    n = P.degree(f)
    allowed = set(range(n + 1))
    for p in _PRIMES:
        if f[-1] % p == 0:
            continue
        degs = _ddf_degrees(list(f), p)
        if degs is None:
            continue
        allowed &= _subset_sums(degs)
        if allowed <= {0, n}:
            break
    return allowed


def _interval_mul(p, q):
    out = [[Q(0), Q(0)] for _ in range(len(p) + len(q) - 1)]
    for i, (al, ah) in enumerate(p):
        for j, (bl, bh) in enumerate(q):
            prods = (al * bl, al * bh, ah * bl, ah * bh)
            out[i + j][0] += min(prods)
            out[i + j][1] += max(prods)
    return out


class _Roots:
    """Isolators of every root, refined lazily and shared across subsets."""

    def __init__(self, poly, intervals):
        from .algebraic import AlgebraicNumber

        self.levels = [[AlgebraicNumber(poly, a, b) for a, b in intervals]]

    def at(self, level: int):
        while len(self.levels) <= level:
            width = Q(1, 2 ** (20 * len(self.levels)))
            self.levels.append([r.refined(width) for r in self.levels[-1]])
        return self.levels[level]


def _integer_product(roots: _Roots, chosen) -> tuple | None:
    """Integer coefficients of prod (x - r) over ``chosen``, or None if impossible."""
    level = 1
    while True:
        prod = [[Q(1), Q(1)]]
        rs = roots.at(level)
        for i in chosen:
            prod = _interval_mul(prod, [[-rs[i].hi, -rs[i].lo], [Q(1), Q(1)]])
        cand = []
        for lo, hi in prod:
            first = int(lo.__ceil__())
            if first > hi:
                return None
            if hi - lo >= 1:
                break
            cand.append(first)
        else:
            return tuple(cand)
        level += 1


@lru_cache(maxsize=4096)
def factor_real_rooted(f: P.Poly) -> tuple[P.Poly, ...] | None:
    """Irreducible primitive integer factors of square-free ``f``.

    Returns None when ``f`` has non-real roots.
    """
    f = P.primitive(f)
    n = P.degree(f)
    if n <= 1:
        return (f,)
    lead = f[-1]
    # y = lead*x turns f into a monic integer polynomial m(y)
    m = tuple(int(f[i]) * lead ** (n - 1 - i) for i in range(n)) + (1,)
    allowed = possible_factor_degrees(m)
    if allowed <= {0, n}:
        return (f,)
    intervals = P.isolate_roots(m)
    if len(intervals) != n:
        return None
    roots = _Roots(m, intervals)
    remaining = list(range(n))
    factors = []
    current = m
    while remaining:
        found = None
        k = len(remaining)
        for size in range(1, k):
            if size not in allowed:
                continue
            for subset in combinations(remaining[1:], size - 1):
                chosen = (remaining[0],) + subset
                g = _integer_product(roots, chosen)
                if g is None:
                    continue
                quot, rem = P.divmod_poly(current, g)
                if not rem:
                    found = (chosen, g, quot)
                    break
            if found:
                break
        if found is None:
            factors.append(current)
            break
        chosen, g, quot = found
        factors.append(g)
        current = tuple(int(c) for c in quot)
        remaining = [i for i in remaining if i not in chosen]
        allowed = {s - size for s in allowed if s >= size} | {0}
    # back to x: g(lead*x)
    return tuple(P.primitive(tuple(c * lead**i for i, c in enumerate(g))) for g in factors)


def minimal_polynomial(f: P.Poly, lo, hi) -> P.Poly:
    """Irreducible factor of ``f`` with its root in the isolating interval (lo, hi)."""
    factors = factor_real_rooted(P.primitive(f))
    if factors is None:
        return P.primitive(f)
    for g in factors:
        if P.sign_at(g, lo) != P.sign_at(g, hi):
            return g
    return P.primitive(f)
