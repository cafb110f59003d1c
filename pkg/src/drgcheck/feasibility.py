"""Feasibility conditions and the chained nonexistence argument.

The chain runs, in fixed order: basic arithmetic conditions, multiplicity
integrality, the Terwilliger bound on local eigenvalues, the connectivity it
forces, a guaranteed coclique size in the local graph, and finally the
Koolen-Park inequality for every coclique size up to that guarantee.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Mapping, Optional, Union

from .model import DerivedParameters, IntersectionArray, derive_parameters
from .spectral import AlgebraicNumber, RootExpression, Spectrum, format_exact, spectrum
from .spectral.spectrum import equals_minus_one

ExactValue = Union[int, Fraction, AlgebraicNumber]


class Condition(str, enum.Enum):
    BASIC_INTEGRALITY = "basic-integrality"
    BASIC_MONOTONICITY = "basic-monotonicity"
    BASIC_HANDSHAKE = "basic-handshake"
    MULTIPLICITY_INTEGRALITY = "multiplicity-integrality"
    TERWILLIGER_BOUND = "terwilliger-bound"
    LOCAL_CONNECTIVITY = "local-connectivity"
    COCLIQUE_GUARANTEE = "coclique-guarantee"
    KOOLEN_PARK = "koolen-park"


class Outcome(str, enum.Enum):
    PASS = "pass"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"


class Connectivity(str, enum.Enum):
    CONNECTED = "connected"
    UNKNOWN = "unknown"
    INAPPLICABLE = "inapplicable"


class Inapplicable(ValueError):
    """A condition's preconditions do not hold for this array."""


@dataclass(frozen=True)
class ProofStep:
    condition: Condition
    outcome: Outcome
    detail: str
    inputs: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    array: IntersectionArray
    status: str  # "infeasible" | "inconclusive"
    trace: tuple[ProofStep, ...]
    killer: Optional[int] = None
    derived: Optional[DerivedParameters] = None
    spectrum: Optional[Spectrum] = None

    @property
    def infeasible(self) -> bool:
        return self.status == "infeasible"

    @property
    def killer_step(self) -> Optional[ProofStep]:
        return None if self.killer is None else self.trace[self.killer]


def _fmt(x) -> str:
    # irrational values by their grid interval; the report adds minimal polynomials
    if isinstance(x, AlgebraicNumber) and not x.is_rational:
        return x.interval_string()
    return format_exact(x)


def _seq(xs) -> str:
    return ", ".join(_fmt(x) for x in xs)


# --- basic conditions ---------------------------------------------------------


def _integrality(dp: DerivedParameters) -> ProofStep:
    inputs = {"k": dp.k, "n": dp.n}
    for i, ki in enumerate(dp.k):
        if ki.denominator != 1 or ki <= 0:
            return ProofStep(Condition.BASIC_INTEGRALITY, Outcome.VIOLATED,
                             f"valency k_{i} = {_fmt(ki)} is not a positive integer", inputs)
    return ProofStep(Condition.BASIC_INTEGRALITY, Outcome.PASS,
                     f"valencies k = {_seq(dp.k)} are positive integers, n = {_fmt(dp.n)}",
                     inputs)


def _monotonicity(arr: IntersectionArray) -> ProofStep:
    b, c = arr.b, arr.c
    inputs = {"b": b, "c": c}
    for i in range(1, arr.d):
        if b[i] > b[i - 1]:
            return ProofStep(Condition.BASIC_MONOTONICITY, Outcome.VIOLATED,
                             f"b_{i} = {b[i]} > b_{i-1} = {b[i-1]}", inputs)
        if c[i] < c[i - 1]:
            return ProofStep(Condition.BASIC_MONOTONICITY, Outcome.VIOLATED,
                             f"c_{i+1} = {c[i]} < c_{i} = {c[i-1]}", inputs)
    if c[-1] > b[0]:
        return ProofStep(Condition.BASIC_MONOTONICITY, Outcome.VIOLATED,
                         f"c_{arr.d} = {c[-1]} > b_0 = {b[0]}", inputs)
    return ProofStep(Condition.BASIC_MONOTONICITY, Outcome.PASS,
                     "b_0 >= ... >= b_{d-1} >= 1 and 1 = c_1 <= ... <= c_d <= b_0", inputs)


def _nonnegativity(dp: DerivedParameters) -> ProofStep:
    inputs = {"a": dp.a}
    for i, ai in enumerate(dp.a):
        if ai < 0:
            return ProofStep(Condition.BASIC_MONOTONICITY, Outcome.VIOLATED,
                             f"a_{i} = {ai} < 0", inputs)
    return ProofStep(Condition.BASIC_MONOTONICITY, Outcome.PASS,
                     f"a = {_seq(dp.a)} are all nonnegative", inputs)


def _handshake(arr: IntersectionArray, dp: DerivedParameters) -> ProofStep:
    inputs = {"n": dp.n, "b0": arr.b0, "k": dp.k, "a": dp.a}
    if not dp.integral:
        return ProofStep(Condition.BASIC_HANDSHAKE, Outcome.INAPPLICABLE,
                         "valencies are not all integers", inputs)
    if (dp.n * arr.b0) % 2:
        return ProofStep(Condition.BASIC_HANDSHAKE, Outcome.VIOLATED,
                         f"n*b_0 = {_fmt(dp.n)}*{arr.b0} = {_fmt(dp.n * arr.b0)} is odd", inputs)
    for i, (ki, ai) in enumerate(zip(dp.k, dp.a)):
        if (ki * ai) % 2:
            return ProofStep(Condition.BASIC_HANDSHAKE, Outcome.VIOLATED,
                             f"k_{i}*a_{i} = {_fmt(ki)}*{ai} = {_fmt(ki * ai)} is odd", inputs)
    return ProofStep(Condition.BASIC_HANDSHAKE, Outcome.PASS,
                     f"n*b_0 = {_fmt(dp.n * arr.b0)} and every k_i*a_i are even", inputs)


def _multiplicity_integrality(sp: Spectrum) -> ProofStep:
    inputs = {"m": sp.multiplicities}
    for i, m in enumerate(sp.multiplicities):
        if isinstance(m, RootExpression):
            return ProofStep(Condition.MULTIPLICITY_INTEGRALITY, Outcome.VIOLATED,
                             f"m_{i} = {m} is not an integer", inputs)
        if m.denominator != 1 or m <= 0:
            return ProofStep(Condition.MULTIPLICITY_INTEGRALITY, Outcome.VIOLATED,
                             f"m_{i} = {_fmt(m)} is not a positive integer", inputs)
    return ProofStep(Condition.MULTIPLICITY_INTEGRALITY, Outcome.PASS,
                     f"multiplicities m = {_seq(sp.multiplicities)} are positive integers", inputs)


def check_basic(arr: IntersectionArray, dp: DerivedParameters,
                sp: Spectrum | None = None) -> list[ProofStep]:
    """Integrality, ordering, handshake parity and multiplicity checks."""
    if sp is None:
        sp = spectrum(arr, dp)
    return [
        _integrality(dp),
        _monotonicity(arr),
        _nonnegativity(dp),
        _handshake(arr, dp),
        _multiplicity_integrality(sp),
    ]


# --- the lemma chain ----------------------------------------------------------


def terwilliger_bound(arr: IntersectionArray, dp: DerivedParameters, sp: Spectrum) -> ExactValue:
    """Upper bound -b_1/(theta_d + 1) - 1 on every local graph's second eigenvalue."""
    if arr.d < 2:
        raise Inapplicable("diameter 1: no b_1")
    theta = sp.theta_min
    if equals_minus_one(theta):
        raise Inapplicable("theta_d = -1")
    if theta > -1:
        raise Inapplicable(f"theta_d = {_fmt(theta)} > -1")
    b1 = arr.b[1]
    if isinstance(theta, AlgebraicNumber):
        # (-theta - 1 - b1) / (theta + 1)
        return theta.mobius(-1, -1 - b1, 1, 1)
    return Fraction(-b1) / (theta + 1) - 1


def local_connectivity(bound: ExactValue, a1: int) -> Connectivity:
    """``connected`` iff bound < a1: a disconnected local graph has second eigenvalue a1."""
    if a1 <= 0:
        raise Inapplicable(f"a1 = {a1}: local graph has no edges")
    return Connectivity.CONNECTED if bound < a1 else Connectivity.UNKNOWN


def guaranteed_coclique_size(dp: DerivedParameters, conn: Connectivity) -> Optional[int]:
    v, k = int(dp.k[1]), dp.a1
    if k == 0:
        return v
    if k < 0 or k >= v - 1:
        return None
    if conn is not Connectivity.CONNECTED:
        return None
    if k == 2 and v % 2:
        # connected 2-regular: the odd cycle C_v
        return v // 2
    return -(-v // k)


def koolen_park_rhs(dp: DerivedParameters, b0: int, c: int) -> Fraction:
    return Fraction(c * (dp.a1 + 1) - b0, comb(c, 2))


def koolen_park_test(arr: IntersectionArray, dp: DerivedParameters, c: int) -> ProofStep:
    """c_2 - 1 >= (c(a_1 + 1) - b_0) / C(c, 2) for a coclique of size c in a local graph."""
    if arr.d < 2:
        return ProofStep(Condition.KOOLEN_PARK, Outcome.INAPPLICABLE,
                         "koolen-park: diameter 1 has no c_2", {"c": c})
    if c < 2:
        raise ValueError("koolen-park needs a coclique of size c >= 2")
    lhs = Fraction(arr.c[1] - 1)
    rhs = koolen_park_rhs(dp, arr.b0, c)
    inputs = {"c": c, "c2": arr.c[1], "a1": dp.a1, "b0": arr.b0, "lhs": lhs, "rhs": rhs}
    if lhs >= rhs:
        return ProofStep(Condition.KOOLEN_PARK, Outcome.PASS,
                         f"koolen-park at c={c}: {_fmt(lhs)} >= {_fmt(rhs)} holds", inputs)
    return ProofStep(Condition.KOOLEN_PARK, Outcome.VIOLATED,
                     f"koolen-park at c={c}: {_fmt(lhs)} >= {_fmt(rhs)} FAILS", inputs)


def _terwilliger_steps(arr, dp, sp):
    """Terwilliger and connectivity steps plus the resulting connectivity."""
    theta = sp.theta_min
    try:
        bound = terwilliger_bound(arr, dp, sp)
    except Inapplicable as exc:
        steps = [
            ProofStep(Condition.TERWILLIGER_BOUND, Outcome.INAPPLICABLE,
                      f"terwilliger bound inapplicable: {exc}", {"theta_d": theta}),
            ProofStep(Condition.LOCAL_CONNECTIVITY, Outcome.INAPPLICABLE,
                      "local connectivity unknown: no terwilliger bound", {}),
        ]
        conn = Connectivity.INAPPLICABLE if dp.a1 <= 0 else Connectivity.UNKNOWN
        return steps, conn
    b1 = arr.b[1]
    tb = ProofStep(Condition.TERWILLIGER_BOUND, Outcome.PASS,
                   f"terwilliger bound: B = -{b1}/(theta_d+1) - 1 = {_fmt(bound)}"
                   f" with theta_d = {_fmt(theta)}",
                   {"b1": b1, "theta_d": theta, "B": bound})
    a1 = dp.a1
    try:
        conn = local_connectivity(bound, a1)
    except Inapplicable as exc:
        lc = ProofStep(Condition.LOCAL_CONNECTIVITY, Outcome.INAPPLICABLE,
                       f"local connectivity irrelevant: {exc}", {"B": bound, "a1": a1})
        return [tb, lc], Connectivity.INAPPLICABLE
    if conn is Connectivity.CONNECTED:
        detail = f"terwilliger bound: {_fmt(bound)} < a1 = {a1} => local graph connected"
    else:
        detail = f"terwilliger bound: {_fmt(bound)} >= a1 = {a1} => connectivity unknown"
    lc = ProofStep(Condition.LOCAL_CONNECTIVITY, Outcome.PASS, detail,
                   {"B": bound, "a1": a1, "connectivity": conn.value})
    return [tb, lc], conn


def _coclique_step(dp: DerivedParameters, conn: Connectivity, size: Optional[int]) -> ProofStep:
    v, k = int(dp.k[1]), dp.a1
    inputs = {"v": v, "a1": k, "connectivity": conn.value}
    if size is None:
        if 0 < k and k >= v - 1:
            why = f"local graph is complete K_{v}"
        elif k < 0:
            why = f"a1 = {k} < 0"
        else:
            why = "local graph not known to be connected"
        return ProofStep(Condition.COCLIQUE_GUARANTEE, Outcome.INAPPLICABLE,
                         f"no coclique guaranteed: {why}", inputs)
    inputs["size"] = size
    if k == 0:
        why = f"local graph is edgeless on {v} vertices"
    elif k == 2 and v % 2:
        why = f"local graph is the odd cycle C_{v}"
    elif v % k:
        why = f"ceil({v}/{k}); {v}/{k} > {v // k}"
    else:
        why = f"{v}/{k}"
    return ProofStep(Condition.COCLIQUE_GUARANTEE, Outcome.PASS,
                     f"guaranteed coclique: {size} ({why})", inputs)


def run_nonexistence_chain(arr: IntersectionArray) -> Verdict:
    dp = derive_parameters(arr)
    sp = spectrum(arr, dp)
    trace = check_basic(arr, dp, sp)

    steps, conn = _terwilliger_steps(arr, dp, sp)
    trace.extend(steps)

    size = guaranteed_coclique_size(dp, conn)
    trace.append(_coclique_step(dp, conn, size))

    if size is None or size < 2 or arr.d < 2:
        why = "no coclique of size >= 2 guaranteed" if arr.d >= 2 else "diameter 1 has no c_2"
        trace.append(ProofStep(Condition.KOOLEN_PARK, Outcome.INAPPLICABLE,
                               f"koolen-park not applied: {why}", {}))
    else:
        # every guaranteed size implies all smaller ones; report the worst c
        candidates = [koolen_park_test(arr, dp, c) for c in range(2, size + 1)]
        worst = max(candidates, key=lambda s: s.inputs["rhs"] - s.inputs["lhs"])
        inputs = dict(worst.inputs, c_range=f"2..{size}")
        trace.append(ProofStep(worst.condition, worst.outcome, worst.detail, inputs))

    killer = next((i for i, s in enumerate(trace) if s.outcome is Outcome.VIOLATED), None)
    return Verdict(
        array=arr,
        status="inconclusive" if killer is None else "infeasible",
        trace=tuple(trace),
        killer=killer,
        derived=dp,
        spectrum=sp,
    )
