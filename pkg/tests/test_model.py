import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from drgcheck.model import IntersectionArray, derive_parameters

from helpers import TARGET, random_array


@st.composite
def arrays(draw, max_d=6, max_b0=60):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_array(random.Random(seed), max_d=max_d, max_b0=max_b0)


def test_target_parameters():
    dp = derive_parameters(TARGET)
    assert dp.a == (0, 18, 40, 10)
    assert dp.a1 == 18
    assert dp.k == (1, 55, 495, 121)
    assert dp.n == 672
    assert all(isinstance(k, Fraction) for k in dp.k)


def test_pentagon():
    dp = derive_parameters(IntersectionArray((2, 1), (1, 1)))
    assert (dp.a, dp.k, dp.n) == ((0, 0, 1), (1, 2, 2), 5)


@pytest.mark.parametrize("k", [1, 2, 5, 17])
def test_complete_graph(k):
    dp = derive_parameters(IntersectionArray((k,), (1,)))
    assert dp.a == (0, k - 1)
    assert dp.n == k + 1
    assert dp.a1 == k - 1


def test_non_integral_valency_kept_exact():
    dp = derive_parameters(IntersectionArray((5, 3), (1, 2)))
    assert dp.k == (1, 5, Fraction(15, 2))
    assert not dp.integral


@pytest.mark.parametrize("b,c", [((), ()), ((3, 2), (1,)), ((3,), (2,)), ((0,), (1,)), ((3, -1), (1, 1))])
def test_invalid_arrays_rejected(b, c):
    with pytest.raises(ValueError):
        IntersectionArray(b, c)


def test_canonical_string():
    assert str(TARGET) == "{55,36,11;1,4,45}"
    assert TARGET.d == 3 and TARGET.b0 == 55 and TARGET.c2 == 4
    assert IntersectionArray((4,), (1,)).c2 is None


@given(arrays())
def test_valencies_sum_to_n(arr):
    dp = derive_parameters(arr)
    assert sum(dp.k) == dp.n
    assert dp.a[0] == 0
    assert dp.a[-1] == arr.b0 - arr.c[-1]
    for i in range(1, arr.d):
        assert dp.a[i] == arr.b0 - arr.b[i] - arr.c[i - 1]


@given(arrays())
def test_edge_counts_between_layers(arr):
    dp = derive_parameters(arr)
    for i in range(arr.d):
        assert dp.k[i] * arr.b[i] == dp.k[i + 1] * arr.c[i]


@given(arrays())
def test_deterministic(arr):
    assert derive_parameters(arr) == derive_parameters(arr)
