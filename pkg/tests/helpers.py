"""Shared generators for the test-suite."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from drgcheck.model import IntersectionArray
from drgcheck.oracle import Graph

TARGET = IntersectionArray((55, 36, 11), (1, 4, 45))


def random_array(rng: random.Random, max_d: int = 6, max_b0: int = 60) -> IntersectionArray:
    """Syntactically valid array: b non-increasing, c non-decreasing and bounded by b_0."""
    d = rng.randint(1, max_d)
    b0 = rng.randint(2, max_b0)
    b = [b0]
    for _ in range(d - 1):
        b.append(rng.randint(1, b[-1]))
    c = [1]
    for _ in range(d - 1):
        c.append(rng.randint(c[-1], b0))
    return IntersectionArray(tuple(b), tuple(c))


def random_arrays(seed: int, count: int, **kw) -> list[IntersectionArray]:
    rng = random.Random(seed)
    return [random_array(rng, **kw) for _ in range(count)]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def brute_force_alpha(g: Graph) -> int:
    """Independence number by testing every one of the 2^n vertex subsets."""
    n = g.vertex_count
    if n == 0:
        return 0
    nbmask = [sum(1 << w for w in nb) for nb in g.adjacency]
    masks = np.arange(1 << n, dtype=np.int64)
    indep = np.ones(1 << n, dtype=bool)
    for v in range(n):
        lo, hi = 1 << v, 1 << (v + 1)
        block = masks[lo:hi]
        indep[lo:hi] = indep[block - lo] & ((block & nbmask[v]) == 0)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        sizes += (masks >> v) & 1
    return int(sizes[indep].max())


def symmetric_intersection_matrix(arr: IntersectionArray) -> np.ndarray:
    """Symmetric tridiagonal matrix similar to L1 (off-diagonals sqrt(b_i c_{i+1}))."""
    from drgcheck.model import derive_parameters

    a = derive_parameters(arr).a
    d = arr.d
    m = np.diag(np.array(a, dtype=float))
    for i in range(d):
        off = np.sqrt(arr.b[i] * arr.c[i])
        m[i, i + 1] = m[i + 1, i] = off
    return m


def cosine_multiplicities(arr: IntersectionArray, thetas) -> list[Fraction]:
    """Independent multiplicity formula for rational eigenvalues, via Fractions only."""
    from drgcheck.model import derive_parameters

    dp = derive_parameters(arr)
    out = []
    for t in thetas:
        t = Fraction(t)
        u = [Fraction(1), t / arr.b0]
        for i in range(1, arr.d):
            u.append((t * u[i] - arr.c[i - 1] * u[i - 1] - dp.a[i] * u[i]) / arr.b[i])
        out.append(dp.n / sum(k * x * x for k, x in zip(dp.k, u)))
    return out
