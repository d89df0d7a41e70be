from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from catalan_tr.oracles import bernoulli, double_factorial, dvv, euler_characteristic_mgn


def test_double_factorial():
    assert [double_factorial(k) for k in (-1, 0, 1, 5, 6)] == [1, 1, 1, 15, 48]
    with pytest.raises(ValueError):
        double_factorial(-3)


@pytest.mark.parametrize("n", range(0, 14))
def test_bernoulli_matches_sympy(n):
    b = sympy.bernoulli(n)
    # sympy >= 1.12 uses B_1 = +1/2
    if n == 1:
        b = -b if b > 0 else b
    assert bernoulli(n) == Fraction(int(b.p), int(b.q))


def test_dvv_known_values():
    assert dvv(0, [0, 0, 0]) == 1
    assert dvv(1, [1]) == Fraction(1, 24)
    assert dvv(0, [1, 0, 0, 0]) == 1
    assert dvv(2, [4]) == Fraction(1, 1152)
    assert dvv(2, [3, 2]) == Fraction(29, 5760)
    assert dvv(1, [1, 1]) == Fraction(1, 24)
    assert dvv(3, [7]) == Fraction(1, 82944)


def test_dvv_dimension_constraint():
    assert dvv(1, [2]) == 0
    assert dvv(0, [0, 0]) == 0


@given(st.integers(0, 2), st.lists(st.integers(0, 4), min_size=1, max_size=3))
def test_string_equation(g, d):
    # <tau_0 prod tau_{d_i}> = sum_j <... tau_{d_j - 1} ...>
    if sum(d) != 3 * g - 3 + len(d) + 1 or 2 * g - 2 + len(d) + 1 <= 0:
        return
    if g == 0 and len(d) == 2:
        return
    lhs = dvv(g, [0] + d)
    rhs = sum((dvv(g, d[:j] + [d[j] - 1] + d[j + 1:]) for j in range(len(d)) if d[j] > 0), Fraction(0))
    assert lhs == rhs


@given(st.integers(1, 2), st.lists(st.integers(0, 4), min_size=1, max_size=3))
def test_dilaton_equation(g, d):
    # <tau_1 prod tau_{d_i}>_g = (2g - 2 + n) <prod tau_{d_i}>_g
    n = len(d)
    if sum(d) != 3 * g - 3 + n:
        return
    assert dvv(g, [1] + d) == (2 * g - 2 + n) * dvv(g, d)


def test_euler_characteristics():
    assert euler_characteristic_mgn(0, 3) == 1
    assert euler_characteristic_mgn(0, 4) == -1
    assert euler_characteristic_mgn(0, 5) == 2
    assert euler_characteristic_mgn(1, 1) == Fraction(-1, 12)
    assert euler_characteristic_mgn(1, 2) == Fraction(1, 12)
    assert euler_characteristic_mgn(2, 1) == Fraction(1, 120)
    assert euler_characteristic_mgn(2, 0) == Fraction(-1, 240)
    with pytest.raises(ValueError):
        euler_characteristic_mgn(0, 2)
