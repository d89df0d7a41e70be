"""The curve x = z + 1/z, y = -z, its global coordinate t, and the
unstable (0,1) and (0,2) data expressed through rational derivatives.

Charts: z = (t + 1)/(t - 1), x = z + 1/z = 2(t^2 + 1)/(t^2 - 1). The
branch points z = +-1 sit at t = infinity and t = 0, and the sheet of the
Catalan generating series (z -> 0 as x -> infinity) is t -> -1.

F_{0,1} and F_{0,2} involve logarithms; only their derivatives are kept.
The additive constant of F_{0,1} is taken to be 0.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import DomainError, LaurentPolynomial, PowerSeries, RationalExpression, lin
from .catalan import z_series

L = LaurentPolynomial
R = RationalExpression


def _t(nvars: int = 1, i: int = 0) -> LaurentPolynomial:
    return L.variable(nvars, i)


# ---------------------------------------------------------------- curve in the z chart

def curve_x_of_z() -> RationalExpression:
    z = _t()
    return R(z * z + 1, z)


def curve_y_of_z() -> RationalExpression:
    return R(-_t())


def curve_relation() -> RationalExpression:
    """z^2 - x(z) z + 1, which vanishes identically on the curve."""
    z = R(_t())
    return (z * z - curve_x_of_z() * z + 1).reduce()


def ramification_points() -> list[Fraction]:
    """Zeros of dx/dz = 1 - 1/z^2."""
    dx = curve_x_of_z().diff(0).reduce()
    return sorted(Fraction(r) for r in (-1, 1) if not dx.evaluate(r))


def dz_dx() -> RationalExpression:
    """dz/dx = z^2 / (z^2 - 1) in the z chart."""
    z = _t()
    return R.from_factors(z * z, [(z - 1, 1), (z + 1, 1)])


def dF01_dz() -> RationalExpression:
    """d/dz of F_{0,1} = -z^2/2 + log z."""
    z = _t()
    return R(1 - z * z, z)


# ---------------------------------------------------------------- t chart

def z_of_t(nvars: int = 1, i: int = 0) -> RationalExpression:
    t = _t(nvars, i)
    return R(t + 1, t - 1)


def x_of_t(t=None, nvars: int = 1, i: int = 0):
    """x = (t+1)/(t-1) + (t-1)/(t+1).

    With a numeric ``t`` the value is returned; otherwise the rational
    expression in variable ``i`` of an ``nvars``-variable ring.
    """
    if t is not None:
        t = Fraction(t)
        if t in (1, -1):
            raise DomainError("x(t) has poles at t = +-1")
        return (t + 1) / (t - 1) + (t - 1) / (t + 1)
    s = _t(nvars, i)
    return R.from_factors(s * s * 2 + 2, [(s - 1, 1), (s + 1, 1)])


def dx_dt(nvars: int = 1, i: int = 0) -> RationalExpression:
    """dx/dt = -8t / (t^2 - 1)^2."""
    t = _t(nvars, i)
    return R.from_factors(t * -8, [(t - 1, 2), (t + 1, 2)])


def dt_dx(nvars: int = 1, i: int = 0) -> RationalExpression:
    """d/dx = -(t^2 - 1)^2 / (8t) d/dt."""
    t = _t(nvars, i)
    return R(-(t * t - 1) ** 2, t * 8)


def w01_coefficient() -> RationalExpression:
    """W_{0,1} = -z dx written as a coefficient of dt."""
    return (-z_of_t() * dx_dt()).reduce()


def dF02(nvars: int, i: int, j: int) -> RationalExpression:
    """d/dt_i of F_{0,2}(t_i, t_j) = -log(1 - z_i z_j): 1/(t_i - 1) - 1/(t_i + t_j)."""
    a = R(L.constant(nvars, 1), lin(nvars, {i: 1}, -1))
    b = R(L.constant(nvars, 1), lin(nvars, {i: 1, j: 1}))
    return a - b


def d2F02(nvars: int, i: int, j: int) -> RationalExpression:
    """Mixed derivative of F_{0,2}(t_i, t_j): 1/(t_i + t_j)^2."""
    return R.from_factors(L.constant(nvars, 1), [(lin(nvars, {i: 1, j: 1}), 2)])


def w02_coefficient(nvars: int = 2, i: int = 0, j: int = 1) -> RationalExpression:
    return d2F02(nvars, i, j)


def bergman_coefficient(nvars: int = 2, i: int = 0, j: int = 1) -> RationalExpression:
    """dt_i dt_j / (t_i - t_j)^2, the first term of W_{0,2}."""
    return R.from_factors(L.constant(nvars, 1), [(lin(nvars, {i: 1, j: -1}), 2)])


def prime_form_lhs() -> RationalExpression:
    """1/(t1 - t2)^2 - x'(t1) x'(t2) / (x(t1) - x(t2))^2."""
    dx1, dx2 = dx_dt(2, 0), dx_dt(2, 1)
    diff = (x_of_t(nvars=2, i=0) - x_of_t(nvars=2, i=1))
    return bergman_coefficient() - dx1 * dx2 / (diff * diff)


def verify_prime_form_identity() -> bool:
    """Check 1/(t1-t2)^2 - x1'x2'/(x1-x2)^2 = 1/(t1+t2)^2 by cross-multiplication."""
    return prime_form_lhs() == w02_coefficient()


def diagonal_pole_order() -> int:
    """Order of the pole of the prime-form difference along t1 = t2 (0 means regular)."""
    lhs = prime_form_lhs()
    diag = lin(2, {0: 1, 1: -1})
    den = lhs.denominator()
    return max(den.multiplicity(diag) - lhs.num.multiplicity(diag), 0)


def t_series_at_infinity(order: int) -> PowerSeries:
    """t(x) = (z(x) + 1)/(z(x) - 1) as a series in v = 1/x; t(infinity) = -1."""
    z = z_series(max(order, 1)).truncate(order) if order >= 1 else PowerSeries([0], 0, "v")
    return (z + 1) / (z - 1)


def unstable_closedness() -> bool:
    """d/dt2 of dF02/dt1 equals d/dt1 of dF02/dt2 (both equal 1/(t1+t2)^2)."""
    a = dF02(2, 0, 1).diff(1)
    b = dF02(2, 1, 0).diff(0)
    return a == b == d2F02(2, 0, 1)
