import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from drgcheck.model import IntersectionArray, derive_parameters
from drgcheck.spectral import (
    AlgebraicNumber,
    RootExpression,
    SpectralDefect,
    eigenvalues,
    equals_minus_one,
    intersection_matrix,
    multiplicities,
    spectrum,
)
from drgcheck.spectral import polynomial as P
from drgcheck.spectral.spectrum import _numeric_roots

from helpers import TARGET, cosine_multiplicities, random_array, symmetric_intersection_matrix

ICOSAHEDRON = IntersectionArray((5, 2, 1), (1, 2, 5))
PETERSEN = IntersectionArray((3, 2), (1, 1))


def _spec(arr):
    return spectrum(arr, derive_parameters(arr))


def test_target_matrix_rows():
    m = intersection_matrix(TARGET, derive_parameters(TARGET))
    assert m.rows() == [[0, 55, 0, 0], [1, 18, 36, 0], [0, 4, 40, 11], [0, 0, 45, 10]]
    assert all(sum(r) == 55 for r in m.rows())


def test_petersen_and_complete_rows():
    assert intersection_matrix(PETERSEN, derive_parameters(PETERSEN)).rows() == [
        [0, 3, 0], [1, 0, 2], [0, 1, 2]]
    k4 = IntersectionArray((7,), (1,))
    assert intersection_matrix(k4, derive_parameters(k4)).rows() == [[0, 7], [1, 6]]


def test_characteristic_polynomial_matches_sympy():
    m = intersection_matrix(TARGET, derive_parameters(TARGET))
    lam = sympy.Symbol("x")
    want = sympy.Matrix(m.rows()).charpoly(lam).all_coeffs()
    assert m.characteristic_polynomial() == tuple(int(c) for c in reversed(want))


def test_target_spectrum_is_rational():
    sp = _spec(TARGET)
    assert sp.eigenvalues == (55, 19, -1, -5)
    assert all(isinstance(t, Fraction) for t in sp.eigenvalues)
    assert sp.multiplicities == (1, 77, 363, 231)
    assert sp.is_integral()


def test_target_multiplicities_from_cosines():
    # independent Fraction recurrence on the same formula
    assert cosine_multiplicities(TARGET, (55, 19, -1, -5)) == [1, 77, 363, 231]


def test_petersen_spectrum():
    sp = _spec(PETERSEN)
    assert sp.eigenvalues == (3, 1, -2)
    assert sp.multiplicities == (1, 5, 4)


@pytest.mark.parametrize("k", range(1, 8))
def test_complete_graph_spectrum(k):
    sp = _spec(IntersectionArray((k,), (1,)))
    assert sp.eigenvalues == (k, -1)
    assert sp.multiplicities == (1, k)
    assert equals_minus_one(sp.theta_min)


def test_icosahedron_spectrum():
    sp = _spec(ICOSAHEDRON)
    t0, t1, t2, t3 = sp.eigenvalues
    assert (t0, t2) == (5, -1)
    assert isinstance(t1, AlgebraicNumber) and isinstance(t3, AlgebraicNumber)
    assert t1.interval_string() == "[2.2360679, 2.2360680]"
    assert t3.interval_string() == "[-2.2360680, -2.2360679]"
    assert P.to_string(t1.minimal_polynomial()) == "x^2-5"
    assert sp.multiplicities == (1, 3, 5, 3)
    assert not equals_minus_one(t3)


def test_irrational_non_integral_multiplicity_stays_exact():
    arr = IntersectionArray((3, 1), (1, 1))
    dp = derive_parameters(arr)
    sp = spectrum(arr, dp)
    assert sp.multiplicities[0] == 1
    exprs = sp.multiplicities[1:]
    assert all(isinstance(m, RootExpression) for m in exprs)
    # sympy oracle: n / sum k_i u_i^2 at the two remaining roots of the char. poly.
    x = sympy.Symbol("x")
    chi = sympy.Matrix(intersection_matrix(arr, dp).rows()).charpoly(x).as_expr()
    others = sympy.real_roots(sympy.Poly(sympy.quo(chi, x - 3), x))
    assert len(others) == 2
    for theta in others:
        u = [1, theta / 3, ((theta - dp.a[1]) * theta / 3 - 1) / arr.b[1]]
        want = sympy.N(7 / sum(k * ui**2 for k, ui in zip((1, 3, 3), u)), 30)
        m = next(e for e in exprs if abs(float(e.root) - float(theta)) < 1e-9)
        lo, hi = m.enclosure(Fraction(1, 10**12))
        assert lo <= Fraction(str(want)) + Fraction(1, 10**20) and Fraction(str(want)) - Fraction(1, 10**20) <= hi
        assert m.integer_value() is None
    assert [str(m) for m in exprs] == ["[1.9393398, 1.9393399]", "[4.0606601, 4.0606602]"]
    assert sp.power_trace(0) == dp.n == 7


def test_multiplicity_operation_matches_spectrum():
    dp = derive_parameters(ICOSAHEDRON)
    eigs = eigenvalues(intersection_matrix(ICOSAHEDRON, dp))
    assert multiplicities(ICOSAHEDRON, dp, eigs) == _spec(ICOSAHEDRON).multiplicities


def test_fallback_isolation_agrees(monkeypatch):
    arrays = [random_array(random.Random(s)) for s in range(60)]
    fast = [_spec(a) for a in arrays]
    monkeypatch.setattr(P, "certify_isolators", lambda f, approx: None)
    slow = [_spec(a) for a in arrays]
    for a, b in zip(fast, slow):
        assert a.eigenvalues == b.eigenvalues
        assert [str(x) for x in a.multiplicities] == [str(x) for x in b.multiplicities]


def test_defect_on_too_few_roots(monkeypatch):
    monkeypatch.setattr(P, "certify_isolators", lambda f, approx: None)
    monkeypatch.setattr(P, "isolate_roots", lambda f: [])
    with pytest.raises(SpectralDefect):
        _spec(ICOSAHEDRON)


def test_root_expression_schedule_invariance():
    theta = _spec(ICOSAHEDRON).eigenvalues[1]
    expr = RootExpression((1, 1), theta)  # 1 + sqrt5
    renders = {str(RootExpression((1, 1), theta.refined(Fraction(1, 10**k)))) for k in (1, 4, 9, 15)}
    assert renders == {str(expr)} == {"[3.2360679, 3.2360680]"}
    assert expr.sign() == 1 and RootExpression((1, -1), theta).sign() == -1


def test_root_expression_detects_integers():
    theta = _spec(ICOSAHEDRON).eigenvalues[1]
    # theta^2 - 2 = 3 on x^2 - 5; pass it unreduced
    assert RootExpression((-2, 0, 1), theta).integer_value() == 3
    assert RootExpression((0, 1), theta).integer_value() is None
    assert RootExpression((-2, 0, 1), theta).grid_cell == 3


integral_arrays = st.integers(0, 10**9).map(lambda s: random_array(random.Random(s), max_d=5, max_b0=30))


@given(integral_arrays)
@settings(max_examples=150, deadline=None)
def test_trace_identities_hold_exactly(arr):
    dp = derive_parameters(arr)
    sp = spectrum(arr, dp)
    assert sp.eigenvalues[0] == arr.b0 and sp.multiplicities[0] == 1
    assert list(sp.eigenvalues) == sorted(sp.eigenvalues, reverse=True)
    assert len(set(sp.eigenvalues)) == arr.d + 1
    assert sp.power_trace(0) == dp.n
    assert sp.power_trace(1) == 0
    assert sp.power_trace(2) == dp.n * arr.b0


@given(integral_arrays)
@settings(max_examples=150, deadline=None)
def test_eigenvalues_bracket_numeric_solver(arr):
    sp = _spec(arr)
    numeric = np.sort(np.linalg.eigvalsh(symmetric_intersection_matrix(arr)))[::-1]
    for theta, x in zip(sp.eigenvalues, numeric):
        if isinstance(theta, AlgebraicNumber):
            r = theta.refined(Fraction(1, 10**9))
            assert r.lo - 1e-9 <= x <= r.hi + 1e-9
        else:
            assert abs(float(theta) - x) <= 1e-9 * max(1.0, abs(x))


@given(integral_arrays)
@settings(max_examples=100, deadline=None)
def test_rational_multiplicities_match_cosine_oracle(arr):
    sp = _spec(arr)
    rational = [(t, m) for t, m in zip(sp.eigenvalues, sp.multiplicities) if isinstance(t, Fraction)]
    want = cosine_multiplicities(arr, [t for t, _ in rational])
    assert [m for _, m in rational] == want


def test_numeric_seed_matches_roots_table():
    m = intersection_matrix(TARGET, derive_parameters(TARGET))
    assert _numeric_roots(m, [55, 19, -1, -5]) == []
