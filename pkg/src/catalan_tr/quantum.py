"""The partition function and its Schrodinger equation, order by order in hbar.

log Z = sum_k hbar^(k-1) S_k with S_0 = F_{0,1}, S_1 = F_{0,2}(t,t)/2 and
S_k = sum over 2g - 2 + n = k - 1 of F_{g,n}(t, ..., t)/n! for k >= 2. Only
the x-derivatives S_k' enter the equation

    (hbar^2 d^2/dx^2 + hbar x d/dx + 1) Z = 0,

whose hbar^K part after dividing by Z is
sum_{k+l=K} S_k' S_l' + S_{K-1}'' + x S_K' + [K = 0].
Everything is computed in the z chart and in the t chart.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from .algebra import LaurentPolynomial, RationalExpression
from .laplace import LaplaceEngine, default_engine, stable_cells
from .spectral import curve_x_of_z, dF01_dz, dt_dx, dz_dx, x_of_t, z_of_t

log = logging.getLogger(__name__)

L = LaurentPolynomial
R = RationalExpression

FProvider = Callable[[int, int], LaurentPolynomial]


@dataclass(frozen=True)
class PrincipalTerm:
    k: int
    derivative: RationalExpression  # dS_k/dx
    chart: str

    __hash__ = None


@dataclass(frozen=True)
class SchrodingerResidual:
    order: int
    residual: RationalExpression
    chart: str

    __hash__ = None

    def vanishes(self) -> bool:
        return self.residual.reduce().is_zero()


def _t() -> LaurentPolynomial:
    return L.variable(1, 0)


def _t_of_z() -> RationalExpression:
    z = _t()
    return R(z + 1, z - 1)


class _Chart:
    name: str

    def x(self) -> RationalExpression:
        raise NotImplementedError

    def d_dx(self, f: RationalExpression) -> RationalExpression:
        raise NotImplementedError

    def from_z(self, f: RationalExpression) -> RationalExpression:
        raise NotImplementedError

    def from_t(self, p: LaurentPolynomial) -> RationalExpression:
        raise NotImplementedError


class ZChart(_Chart):
    name = "z"

    def x(self):
        return curve_x_of_z()

    def d_dx(self, f):
        return (f.diff(0) * dz_dx()).reduce()

    def from_z(self, f):
        return f

    def from_t(self, p):
        return R.from_poly(p).compose_univariate(_t_of_z()).reduce()


class TChart(_Chart):
    name = "t"

    def x(self):
        return x_of_t()

    def d_dx(self, f):
        return (f.diff(0) * dt_dx()).reduce()

    def from_z(self, f):
        return f.compose_univariate(z_of_t()).reduce()

    def from_t(self, p):
        return R.from_poly(p)


CHARTS = {"z": ZChart(), "t": TChart()}


def _chart(name: str) -> _Chart:
    try:
        return CHARTS[name]
    except KeyError:
        raise ValueError(f"unknown chart {name!r}; use 'z' or 't'") from None


def engine_provider(engine: Optional[LaplaceEngine] = None) -> FProvider:
    eng = engine or default_engine()
    return eng.poly


def s_function(k: int, F: FProvider) -> LaurentPolynomial:
    """S_k(t) for k >= 2 as a Laurent polynomial in t."""
    if k < 2:
        raise ValueError("S_0 and S_1 involve logarithms; only their derivatives exist here")
    total = L.zero(1)
    for g, n in stable_cells(k - 1):
        if 2 * g - 2 + n == k - 1:
            diag = F(g, n).embed(1, [0] * n)
            total = total + diag * Fraction(1, factorial(n))
    return total


def principal_term(k: int, F: Optional[FProvider] = None, chart: str = "t") -> PrincipalTerm:
    """dS_k/dx in the requested chart."""
    ch = _chart(chart)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        # dF_{0,1}/dz times dz/dx
        deriv = ch.from_z((dF01_dz() * dz_dx()).reduce())
    elif k == 1:
        # d/dz of -log(1 - z^2)/2 is z/(1 - z^2)
        z = _t()
        deriv = ch.from_z((R(z, 1 - z * z) * dz_dx()).reduce())
    else:
        deriv = ch.d_dx(ch.from_t(s_function(k, F or engine_provider())))
    return PrincipalTerm(k, deriv, ch.name)


def schrodinger_residual(K: int, F: Optional[FProvider] = None, chart: str = "t",
                         terms: Optional[dict] = None) -> SchrodingerResidual:
    """The hbar^K coefficient of Z^{-1} (hbar^2 d^2/dx^2 + hbar x d/dx + 1) Z."""
    ch = _chart(chart)
    F = F or engine_provider()
    if terms is None:
        terms = {}

    def S(k: int) -> RationalExpression:
        if k not in terms:
            terms[k] = principal_term(k, F, chart).derivative
        return terms[k]

    res = R.constant(1, 1 if K == 0 else 0)
    for k in range(K + 1):
        res = res + S(k) * S(K - k)
    if K >= 1:
        res = res + ch.d_dx(S(K - 1))
    res = res + ch.x() * S(K)
    return SchrodingerResidual(K, res.reduce(), ch.name)


def verify_schrodinger(K_max: int, F: Optional[FProvider] = None,
                       charts: tuple[str, ...] = ("t", "z")) -> bool:
    """All residuals up to order K_max vanish in every chart."""
    ok = True
    for chart in charts:
        cache: dict = {}
        for K in range(K_max + 1):
            r = schrodinger_residual(K, F, chart, cache)
            if not r.vanishes():
                log.warning("order hbar^%d residual in the %s chart: %s", K, chart, r.residual)
                ok = False
    return ok


def curve_relation_from_residual() -> RationalExpression:
    """The order-0 residual z^2 - x z + 1 written before any simplification."""
    z = R(_t())
    return z * z - curve_x_of_z() * z + 1


def perturbed_provider(base: FProvider, g: int, n: int, delta: LaurentPolynomial) -> FProvider:
    """An F provider with F_{g,n} replaced by F_{g,n} + delta (mutation tests)."""
    def F(h: int, m: int) -> LaurentPolynomial:
        p = base(h, m)
        return p + delta if (h, m) == (g, n) else p
    return F
