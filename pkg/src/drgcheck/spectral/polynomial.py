"""Dense univariate polynomials over Q.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  Coefficients are ``int``,
``Fraction`` or gmpy2 ``mpq``; every routine here is exact.  Rational
results are ``mpq`` (same hashing and comparisons as ``Fraction``, much
cheaper arithmetic).
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd, lcm
from typing import Sequence, Union

from gmpy2 import mpq as Q

Number = Union[int, Fraction, type(Q())]
RATIONAL_TYPES = (int, Fraction, type(Q()))
Poly = tuple


def trim(p: Sequence[Number]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Poly) -> int:
    return len(p) - 1


def evaluate(p: Poly, x: Number) -> Number:
    acc: Number = 0
    for coef in reversed(p):
        acc = acc * x + coef
    return acc


def sign_at(f: Poly, x: Number) -> int:
    """Sign of integer polynomial ``f`` at rational ``x``, in integer arithmetic.

    Evaluates q**deg * f(p/q) by homogeneous Horner, which has the same sign.
    """
    if not f:
        return 0
    if isinstance(x, int):
        p, q = x, 1
    else:
        p, q = x.numerator, x.denominator
    acc = f[-1]
    qq = 1
    for coef in reversed(f[:-1]):
        qq *= q
        acc = acc * p + coef * qq
    return (acc > 0) - (acc < 0)


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    return trim([a + (q[i] if i < len(q) else 0) for i, a in enumerate(p)])


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1))


def scale(p: Poly, s: Number) -> Poly:
    return trim([s * a for a in p])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out: list[Number] = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p: Poly, e: int) -> Poly:
    out: Poly = (1,)
    for _ in range(e):
        out = mul(out, p)
    return out


def derivative(p: Poly) -> Poly:
    return trim([i * p[i] for i in range(1, len(p))])


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Q(a) for a in p]
    dq, lead = degree(q), Q(q[-1])
    if len(rem) <= dq:
        return (), trim(rem)
    quot = [Q(0)] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        coef = rem[i] / lead
        if coef:
            quot[i - dq] = coef
            for j, b in enumerate(q):
                rem[i - dq + j] -= coef * b
    return trim(quot), trim(rem[:dq])


def mod(p: Poly, q: Poly) -> Poly:
    return divmod_poly(p, q)[1]


def primitive(p: Poly) -> Poly:
    """Integer multiple of ``p`` with coprime coefficients and positive lead."""
    if not p:
        return ()
    den = lcm(*(int(Q(a).denominator) for a in p))
    ints = [int(Q(a) * den) for a in p]
    g = gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return tuple(x // g for x in ints)


def monic(p: Poly) -> Poly:
    lead = Q(p[-1])
    return tuple(Q(a) / lead for a in p)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor, returned primitive (``(1,)`` if coprime)."""
    while q:
        p, q = q, primitive(mod(p, q))
    return primitive(p) if p else ()


def inverse_mod(p: Poly, f: Poly) -> Poly:
    """Inverse of ``p`` in Q[x]/(f); ``p`` and ``f`` must be coprime."""
    r0, r1 = f, mod(p, f)
    s0, s1 = (), (1,)
    while r1 and degree(r1) > 0:
        quot, rem = divmod_poly(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quot, s1))
    if not r1:
        raise ZeroDivisionError("polynomial is not invertible modulo f")
    return mod(scale(s1, 1 / Q(r1[0])), f)


def power_sums(f: Poly, count: int) -> list[Q]:
    """Power sums p_0..p_{count-1} of the roots of ``f`` (Newton's identities)."""
    n = degree(f)
    e = monic(f)  # x^n + e[n-1] x^{n-1} + ... + e[0]
    sums: list[Q] = [Q(n)]
    for k in range(1, count):
        acc = Q(0)
        for i in range(1, min(k, n + 1)):
            acc -= e[n - i] * sums[k - i]
        if k <= n:
            acc -= k * e[n - k]
        sums.append(acc)
    return sums


def trace_mod(p: Poly, f: Poly) -> Q:
    """Sum of ``p(theta)`` over all roots ``theta`` of square-free ``f``."""
    p = mod(p, f)
    sums = power_sums(f, max(len(p), 1))
    return sum((Q(a) * sums[i] for i, a in enumerate(p)), Q(0))


def sturm_chain(f: Poly) -> list[Poly]:
    chain = [primitive(f), primitive(derivative(f))]
    while chain[-1] and degree(chain[-1]) > 0:
        rem = mod(chain[-2], chain[-1])
        if not rem:
            break
        # negate, then rescale by a positive constant: signs are what matter
        chain.append(scale(primitive(rem), -1 if rem[-1] > 0 else 1))
    return chain


def sign_changes(chain: Sequence[Poly], x: Number) -> int:
    """Sign variations of an integer Sturm chain at ``x``."""
    count, last = 0, 0
    for p in chain:
        s = sign_at(p, x)
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def count_roots(chain: Sequence[Poly], lo: Number, hi: Number) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return sign_changes(chain, lo) - sign_changes(chain, hi)


def root_bound(f: Poly) -> Q:
    """Power of two R with every real root in (-R, R) (Cauchy bound, rounded up)."""
    lead = abs(Q(f[-1]))
    cauchy = 1 + max((abs(Q(a)) / lead for a in f[:-1]), default=Q(0))
    r = 1
    while r <= cauchy:
        r *= 2
    return Q(r)


def isolate_roots(f: Poly) -> list[tuple[Q, Q]]:
    """Disjoint open intervals (lo, hi), ascending, one per real root of ``f``.

    ``f`` must be square-free.  Endpoints are never roots.  A rational root
    hit by bisection is returned as a degenerate interval ``(r, r)``.
    """
    if degree(f) < 1:
        return []
    f = primitive(f)
    chain = sturm_chain(f)
    bound = root_bound(f)
    out: list[tuple[Q, Q]] = []
    stack = [(-bound, bound, count_roots(chain, -bound, bound))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if sign_at(f, mid) == 0:
            out.append((mid, mid))
            left = count_roots(chain, lo, mid) - 1
            eps = (hi - lo) / 4
            # step off the rational root so every interval endpoint is a non-root
            while True:
                a, b = mid - eps, mid + eps
                if sign_at(f, a) and sign_at(f, b) and count_roots(chain, a, b) == 1:
                    break
                eps /= 2
            stack.append((lo, a, left))
            stack.append((b, hi, count_roots(chain, b, hi)))
            continue
        stack.append((lo, mid, count_roots(chain, lo, mid)))
        stack.append((mid, hi, count_roots(chain, mid, hi)))
    out.sort()
    return out


def certify_isolators(f: Poly, approx: Sequence[float]) -> list[tuple[Q, Q]] | None:
    """Isolating intervals for all real roots of ``f`` seeded by float guesses.

    Each guess gets a small dyadic interval; if the intervals are disjoint,
    ``f`` changes sign across each, and there are deg f of them, every one
    holds exactly one root.  Returns None when that certificate fails.
    """
    if len(approx) != degree(f):
        return None
    out = []
    for x in sorted(approx):
        if x != x or abs(x) == float("inf"):
            return None
        # half-width about 2^-27 relative, a power of two
        s = Q(1, 2**27) * 2 ** max(0, int(abs(x)).bit_length())
        centre = Q(floor(Q(x) / s)) * s
        lo, hi = centre - s, centre + 2 * s
        if out and lo <= out[-1][1]:
            return None
        if sign_at(f, lo) * sign_at(f, hi) >= 0:
            return None
        out.append((lo, hi))
    return out


def integer_roots(f: Poly, bound: int) -> list[int]:
    """Integer roots of integer polynomial ``f`` with absolute value <= bound."""
    f = primitive(f)
    roots: list[int] = []
    shift = 0
    while f and f[0] == 0:
        f = f[1:]
        shift += 1
    if shift:
        roots.append(0)
    const = abs(f[0])
    for t in range(1, bound + 1):
        if const % t:
            continue
        for r in (t, -t):
            if evaluate(f, r) == 0:
                roots.append(r)
    return roots


def deflate(f: Poly, root: Number) -> Poly:
    quot, rem = divmod_poly(f, (-root, 1))
    if rem:
        raise ValueError(f"{root} is not a root")
    return quot


def substitute_mobius(f: Poly, alpha: Number, beta: Number,
                      gamma: Number, delta: Number) -> Poly:
    """Polynomial vanishing at (alpha*t + beta)/(gamma*t + delta) for every root t of f.

    Uses t = (delta*y - beta)/(alpha - gamma*y) and clears denominators.
    """
    n = degree(f)
    num = trim([-beta, delta])
    den = trim([alpha, -gamma])
    out: Poly = ()
    for i, coef in enumerate(f):
        if coef:
            out = add(out, scale(mul(power(num, i), power(den, n - i)), coef))
    return primitive(out)


def interval_eval(p: Poly, lo, hi) -> tuple[Q, Q]:
    """Enclosure of p over [lo, hi] by interval Horner evaluation.

    Runs in integers: p is scaled to integer coefficients and the interval
    put over a common denominator, so only the two final bounds are rationals.
    """
    if not p:
        return Q(0), Q(0)
    lo, hi = Q(lo), Q(hi)
    den = lcm(*(int(Q(a).denominator) for a in p))
    ints = [int(Q(a) * den) for a in p]
    ld, hd = int(lo.denominator), int(hi.denominator)
    q = lcm(ld, hd)
    xl, xh = int(lo.numerator) * (q // ld), int(hi.numerator) * (q // hd)
    acc_lo = acc_hi = ints[-1]
    qq = 1
    for coef in reversed(ints[:-1]):
        qq *= q
        prods = (acc_lo * xl, acc_lo * xh, acc_hi * xl, acc_hi * xh)
        acc_lo, acc_hi = min(prods) + coef * qq, max(prods) + coef * qq
    scale_ = den * qq
    return Q(acc_lo, scale_), Q(acc_hi, scale_)


def taylor_shift(p: Poly, c: Number) -> Poly:
    """Coefficients of p(c + t) in t."""
    out = list(p)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return trim(out)


def centered_enclosure(p: Poly, c, r) -> tuple[Q, Q]:
    """Enclosure of p over [c - r, c + r] from the Taylor expansion at c."""
    t = taylor_shift(p, Q(c))
    if not t:
        return Q(0), Q(0)
    spread = Q(0)
    rk = Q(1)
    for coef in t[1:]:
        rk *= r
        spread += abs(coef) * rk
    return t[0] - spread, t[0] + spread


def to_string(p: Poly, var: str = "x") -> str:
    """Render like ``x^2-5`` (highest degree first)."""
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        coef = Q(p[i])
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        mag_s = str(mag)
        if i == 0:
            body = mag_s
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag_s}*{mono}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += sign + body
    return out
