from fractions import Fraction

import pytest
import sympy

from catalan_tr.algebra import LaurentPolynomial as L, NotDivisibleError
from catalan_tr.spectral import t_series_at_infinity
from catalan_tr.laplace import (
    FPolynomial,
    InvariantViolation,
    LaplaceEngine,
    PoleCancellationError,
    UnstableError,
    compute_F,
    dvv_oracle,
    euler_characteristic,
    harer_zagier,
    initial_value,
    intersection_numbers,
    laplace_series_check,
    laplace_series_mismatches,
    principal_specialize,
    stable_cells,
    structural_report,
    top_part,
)

t = L.variable(1, 0)
F11 = (t ** 3 - t * 9 - t ** -1 * 9 + t ** -3) * Fraction(-1, 384) + Fraction(1, 24)


def test_F11_exact():
    assert compute_F(1, 1).poly == F11
    assert F11.evaluate(1) == Fraction(1, 12)


def test_F11_by_sympy_integration():
    x = sympy.Symbol("t")
    prim = sympy.integrate(-(x ** 2 - 1) ** 3 / (128 * x ** 4), x)
    prim = sympy.expand(prim - prim.subs(x, -1))
    got = sum(sympy.Rational(c.numerator, c.denominator) * x ** e[0] for e, c in F11.items())
    assert sympy.expand(prim - got) == 0


def test_F03_initial_value():
    F = compute_F(0, 3)
    assert F.poly == initial_value(0, 3)
    assert F.poly.evaluate([1, 1, 1]) == -1
    with pytest.raises(UnstableError):
        initial_value(1, 1)


def test_literal_unstable_lines_leave_poles():
    eng = LaplaceEngine()
    rhs = eng.rhs(0, 3, unstable_lines=True)
    with pytest.raises(NotDivisibleError):
        rhs.to_laurent()
    with pytest.raises(UnstableError):
        eng.rhs(0, 3)


def test_degree_of_F21():
    assert compute_F(2, 1).poly.degree() == 9


@pytest.mark.parametrize("g,n", [(0, 2), (0, 1), (1, 0), (0, 0)])
def test_unstable_rejected(g, n):
    with pytest.raises(UnstableError):
        compute_F(g, n)


@pytest.mark.parametrize("cell", stable_cells(4))
def test_structural_properties(cell):
    report = structural_report(*cell)
    assert all(report.values()), report


def test_euler_characteristic_examples():
    assert euler_characteristic(0, 3) == 1
    assert euler_characteristic(1, 1) == Fraction(-1, 12)
    assert euler_characteristic(1, 2) == Fraction(1, 12)
    assert harer_zagier(2, 1) == euler_characteristic(2, 1)


def test_top_part_F11():
    assert top_part(compute_F(1, 1)) == t ** 3 * Fraction(-1, 384)


@pytest.mark.parametrize("cell", stable_cells(4))
def test_intersection_numbers_match_dvv(cell):
    g, n = cell
    for d, v in intersection_numbers(g, n).items():
        assert v == dvv_oracle(g, d), (g, d)


def test_intersection_spot_values():
    assert intersection_numbers(0, 3) == {(0, 0, 0): 1}
    assert intersection_numbers(1, 1) == {(1,): Fraction(1, 24)}
    assert intersection_numbers(2, 1) == {(4,): Fraction(1, 1152)}


def test_principal_specialization():
    s = L.variable(1, 0)
    assert principal_specialize(compute_F(1, 1)) == s ** 2 * Fraction(1, 4) - s ** 3 * Fraction(1, 6)
    for g, n in stable_cells(3):
        F = compute_F(g, n)
        S = principal_specialize(F)
        assert S.is_polynomial()
        assert S.degree() <= F.expected_degree
        assert S.evaluate(1) == F.poly.evaluate([1] * n)


def test_principal_specialization_rejects_asymmetric():
    bad = FPolynomial(1, 1, t ** 2 + 1)
    with pytest.raises(InvariantViolation):
        principal_specialize(bad)


def test_laplace_series_examples():
    assert laplace_series_check(1, 1, 6)
    F = compute_F(1, 1)
    T = t_series_at_infinity(6)
    series = sum((T ** e[0] * c for e, c in F.poly.items()), T.constant(0, 6))
    assert series[4] == Fraction(1, 4)
    assert series[6] == Fraction(5, 3)
    assert series[2] == 0


@pytest.mark.parametrize("cell", [(1, 1), (0, 3), (0, 4), (1, 2)])
def test_laplace_series_order_eight(cell):
    assert laplace_series_mismatches(*cell, 8) == []


def test_laplace_series_detects_wrong_polynomial():
    eng = LaplaceEngine()
    eng._memo[(1, 1)] = F11 + t * Fraction(1, 100) - t ** -1 * Fraction(1, 100)
    assert not laplace_series_check(1, 1, 6, eng)


def test_engine_uses_store():
    saved = {}

    class Store:
        def load(self, g, n):
            return saved.get((g, n))

        def save(self, g, n, p):
            saved[(g, n)] = p

    eng = LaplaceEngine(Store())
    p = eng.poly(1, 2)
    assert (1, 1) in saved and (1, 2) in saved
    again = LaplaceEngine(Store())
    assert again.poly(1, 2) == p


def test_pole_cancellation_error_type():
    assert issubclass(PoleCancellationError, ArithmeticError)
