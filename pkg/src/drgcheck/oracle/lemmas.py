"""Check the local-graph lemmas on an explicit distance-regular graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from ..feasibility import Inapplicable, koolen_park_rhs, terwilliger_bound
from ..model import IntersectionArray, derive_parameters
from ..spectral import format_exact, spectrum
from .coclique import max_coclique
from .graph import Graph, is_odd_cycle, local_graph, verify_distance_regular

EIGEN_TOL = 1e-9


def second_largest_eigenvalue(g: Graph) -> float:
    """Second largest adjacency eigenvalue (counted with multiplicity)."""
    if g.vertex_count == 1:
        return 0.0
    vals = np.linalg.eigvalsh(g.adjacency_matrix())
    return float(vals[-2])


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str          # "L1", "L2" or "L3"
    vertex: int
    outcome: str        # "pass", "fail" or "inapplicable"
    measured: object = None
    bound: object = None
    note: str = ""


@dataclass
class LemmaReport:
    array: Optional[IntersectionArray]
    checks: list[LemmaCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.array is not None and all(c.outcome != "fail" for c in self.checks)

    def failures(self) -> list[LemmaCheck]:
        return [c for c in self.checks if c.outcome == "fail"]

    def lines(self) -> list[str]:
        if self.array is None:
            return ["graph is not distance-regular"]
        out = [f"intersection array: {self.array}"]
        for c in self.checks:
            out.append(f"{c.lemma} x={c.vertex} {c.outcome}: measured {_show(c.measured)}"
                       f" vs bound {_show(c.bound)}" + (f" ({c.note})" if c.note else ""))
        out.append("all lemma checks passed" if self.passed else
                   f"{len(self.failures())} lemma check(s) FAILED")
        return out


def _show(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.9f}"
    return format_exact(x)


def validate_lemmas(g: Graph) -> LemmaReport:
    arr = verify_distance_regular(g)
    report = LemmaReport(arr)
    if arr is None:
        return report
    dp = derive_parameters(arr)
    sp = spectrum(arr, dp)
    try:
        bound = terwilliger_bound(arr, dp, sp)
    except Inapplicable as exc:
        bound, why = None, str(exc)

    for x in range(g.vertex_count):
        loc = local_graph(g, x)
        v = loc.vertex_count

        if bound is None:
            report.checks.append(LemmaCheck("L2", x, "inapplicable", note=why))
        else:
            lam = second_largest_eigenvalue(loc)
            ok = lam <= float(bound) + EIGEN_TOL
            report.checks.append(LemmaCheck("L2", x, "pass" if ok else "fail", lam, bound))

        alpha = max_coclique(loc).size
        k = loc.regular_degree()
        if k is not None and 0 < k < v - 1 and loc.is_connected() and not is_odd_cycle(loc):
            need = -(-v // k)
            report.checks.append(LemmaCheck("L3", x, "pass" if alpha >= need else "fail",
                                            alpha, need, f"ceil({v}/{k})"))
        else:
            report.checks.append(LemmaCheck("L3", x, "inapplicable", alpha,
                                            note="local graph outside the lemma's hypotheses"))

        if arr.d >= 2 and alpha >= 2:
            lhs = Fraction(arr.c[1] - 1)
            rhs = koolen_park_rhs(dp, arr.b0, alpha)
            report.checks.append(LemmaCheck("L1", x, "pass" if lhs >= rhs else "fail",
                                            lhs, rhs, f"c={alpha}"))
        else:
            report.checks.append(LemmaCheck("L1", x, "inapplicable", alpha,
                                            note="no c_2 or no coclique of size 2"))
    return report
