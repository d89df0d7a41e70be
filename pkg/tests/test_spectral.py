from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from catalan_tr.algebra import DomainError, LaurentPolynomial as L, RationalExpression as R
from catalan_tr.spectral import (
    bergman_coefficient,
    curve_relation,
    d2F02,
    dF01_dz,
    dF02,
    diagonal_pole_order,
    dt_dx,
    dx_dt,
    prime_form_lhs,
    ramification_points,
    t_series_at_infinity,
    unstable_closedness,
    verify_prime_form_identity,
    w01_coefficient,
    w02_coefficient,
    x_of_t,
    z_of_t,
)

nonpole = st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(lambda t: t not in (0, 1, -1))


def test_curve_relation_and_ramification():
    assert curve_relation().is_zero()
    assert ramification_points() == [-1, 1]


def test_x_of_t_examples():
    assert x_of_t(3) == Fraction(5, 2)
    with pytest.raises(DomainError):
        x_of_t(-1)
    t = L.variable(1, 0)
    assert x_of_t() == R.from_factors(t * t * 2 + 2, [(t * t - 1, 1)])
    z = z_of_t()
    assert x_of_t() == z + z.inverse()


@given(nonpole)
def test_deck_transformation(t):
    # x is even in t; t -> 1/t sends x to -x
    assert x_of_t(-t) == x_of_t(t)
    assert x_of_t(1 / t) == -x_of_t(t)


def test_dx_dt():
    assert dx_dt() == x_of_t().diff(0)
    assert dx_dt().evaluate(2) == Fraction(-16, 9)
    assert (dx_dt() * dt_dx()).reduce() == R.constant(1, 1)


def test_unstable_data():
    assert unstable_closedness()
    assert d2F02(2, 0, 1) == w02_coefficient()
    z = L.variable(1, 0)
    assert dF01_dz() == R.from_poly(z ** -1 - z)
    # W_{0,1} = -z dx
    assert w01_coefficient() == (-z_of_t() * dx_dt()).reduce()
    # dF02/dt1 integrates -log(1 - z1 z2) in the t chart
    t1, t2 = sympy.symbols("t1 t2")
    z1, z2 = (t1 + 1) / (t1 - 1), (t2 + 1) / (t2 - 1)
    want = sympy.diff(-sympy.log(1 - z1 * z2), t1)
    got = dF02(2, 0, 1).evaluate([3, 5])
    assert sympy.Rational(got.numerator, got.denominator) == sympy.nsimplify(want.subs({t1: 3, t2: 5}))


def test_prime_form_identity():
    assert verify_prime_form_identity()
    assert prime_form_lhs().evaluate([2, 3]) == Fraction(1, 25)
    assert diagonal_pole_order() == 0
    assert bergman_coefficient().evaluate([2, 3]) == 1


def test_t_series_at_infinity():
    T = t_series_at_infinity(8)
    assert T[0] == -1
    assert [T[k] for k in range(5)] == [-1, -2, -2, -4, -6]
    # x(t(x)) = x with v = 1/x, cleared of denominators: (2T^2 + 2) v = T^2 - 1
    v = T.variable(8)
    assert (T * T * 2 + 2) * v == T * T - 1
