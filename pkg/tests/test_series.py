from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from catalan_tr.algebra import (
    DomainError,
    PowerSeries,
    poly_from_records,
    poly_to_records,
    rational_from_str,
    rational_to_str,
)
from catalan_tr.algebra.series import from_list

from conftest import laurent, small_fractions, sympy_to_fraction

ORDER = 6


@st.composite
def series(draw, zero_constant=False, unit=False):
    coeffs = [draw(small_fractions()) for _ in range(ORDER + 1)]
    if zero_constant:
        coeffs[0] = Fraction(0)
    if unit and coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return PowerSeries(coeffs, ORDER)


def _sym(s: PowerSeries, v):
    return sum(sympy.Rational(c.numerator, c.denominator) * v ** k for k, c in enumerate(s.coeffs))


@settings(max_examples=25)
@given(series(), series(unit=True))
def test_division_matches_sympy(a, b):
    v = sympy.Symbol("v")
    q = a / b
    assert q * b == a
    inv = sympy.invert(_sym(b, v), v ** (ORDER + 1))
    want = sympy.expand(_sym(a, v) * inv)
    for k in range(ORDER + 1):
        assert q[k] == sympy_to_fraction(want.coeff(v, k))


@settings(max_examples=25)
@given(series(), series(zero_constant=True))
def test_compose_matches_sympy(f, g):
    v = sympy.Symbol("v")
    h = f.compose(g)
    want = sympy.expand(_sym(f, v).subs(v, _sym(g, v)))
    for k in range(ORDER + 1):
        assert h[k] == sympy_to_fraction(want.coeff(v, k))


@given(series(zero_constant=True))
def test_reverse_is_compositional_inverse(s):
    if s[1] == 0:
        return
    r = s.reverse()
    assert s.compose(r) == PowerSeries.variable(ORDER)
    assert r.compose(s) == PowerSeries.variable(ORDER)


def test_negative_powers_and_shifts():
    v = PowerSeries.variable(5)
    one_minus = 1 - v
    inv = one_minus ** -1
    assert [inv[k] for k in range(6)] == [1] * 6
    assert (v * v).shift_down(2)[0] == 1
    assert v.shift_up(2)[3] == 1
    assert (v ** 3).derivative()[2] == 3
    assert (v ** 2).valuation() == 2


def test_truncation_bounds():
    s = from_list([1, 2, 3])
    with pytest.raises(IndexError):
        s[5]
    assert (s * s).order == s.order


def test_compose_needs_zero_constant():
    with pytest.raises(DomainError):
        from_list([1, 1]).compose(from_list([1, 1]))


def test_str_uses_minus_signs():
    assert str(from_list([1, -2, 0])) == "1 - 2*v + O(v^3)"


@given(small_fractions())
def test_rational_wire_roundtrip(c):
    s = rational_to_str(c)
    assert isinstance(s, str)
    assert rational_from_str(s) == c


def test_rational_wire_rejects_floats():
    with pytest.raises(TypeError):
        rational_from_str(0.5)


@given(laurent(nvars=3))
def test_poly_wire_roundtrip(p):
    recs = poly_to_records(p)
    assert poly_from_records(recs, 3) == p
    assert all(isinstance(r["coeff"], str) for r in recs)


def test_poly_wire_rejects_bad_records():
    with pytest.raises(ValueError):
        poly_from_records([{"exp": [1], "coeff": "1"}], 2)
    with pytest.raises(ValueError):
        poly_from_records([{"exp": [1], "coeff": "1"}, {"exp": [1], "coeff": "2"}], 1)
