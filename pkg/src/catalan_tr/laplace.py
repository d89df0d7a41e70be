"""Laplace transforms F_{g,n}(t_1..t_n) of the generalized Catalan numbers.

F_{g,n} = sum_mu D_{g,n}(mu) x_1^{-mu_1}...x_n^{-mu_n} with x_i = x(t_i)
is a Laurent polynomial. It is computed from lower (g', n') by a
differential recursion for dF/dt_1; the right-hand side is assembled as a
rational expression, its apparent poles at t_1 = +-t_j are cancelled
exactly, the result is integrated in t_1 and the constant of integration is
fixed by F = 0 at t_1 = -1 (the point x_1 = infinity of the Laplace series).
Symmetry in t_1..t_n is therefore a check, not something imposed.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Callable, Dict, Optional

from .algebra import (
    LaurentPolynomial,
    LogTermError,
    NotDivisibleError,
    PowerSeries,
    RationalExpression,
    lin,
)
from .catalan import d_gn
from .oracles import double_factorial, dvv, euler_characteristic_mgn
from .spectral import d2F02, dF02, t_series_at_infinity

log = logging.getLogger(__name__)

L = LaurentPolynomial
R = RationalExpression


class UnstableError(ValueError):
    """(g, n) with 2g - 2 + n <= 0 has no Laurent-polynomial transform."""


class PoleCancellationError(ArithmeticError):
    """The recursion's right-hand side kept a pole at t_1 = +-t_j."""


class InvariantViolation(AssertionError):
    pass


def is_stable(g: int, n: int) -> bool:
    return g >= 0 and n >= 1 and 2 * g - 2 + n > 0


def require_stable(g: int, n: int) -> None:
    if not is_stable(g, n):
        raise UnstableError(f"(g, n) = ({g}, {n}) is not in the stable range 2g - 2 + n > 0")


@dataclass(frozen=True)
class FPolynomial:
    g: int
    n: int
    poly: LaurentPolynomial

    @property
    def expected_degree(self) -> int:
        return 3 * (2 * self.g - 2 + self.n)

    def __call__(self, *point):
        return self.poly.evaluate(point)


def _p3(nvars: int, i: int) -> LaurentPolynomial:
    t = L.variable(nvars, i)
    return (t * t - 1) ** 3 * L.variable(nvars, i, -2)


def _p2(nvars: int, i: int) -> LaurentPolynomial:
    t = L.variable(nvars, i)
    return (t * t - 1) ** 2 * L.variable(nvars, i, -2)


def initial_value(g: int, n: int) -> LaurentPolynomial:
    """F_{0,3} = -(1/16)(t1+1)(t2+1)(t3+1)(1 + 1/(t1 t2 t3)).

    The recursion only sees stable terms, so with (g, n) = (0, 3) its right-hand
    side is empty; this cell is supplied directly and checked against D_{0,3}.
    """
    if (g, n) != (0, 3):
        raise UnstableError(f"no initial value stored for ({g}, {n})")
    t = [L.variable(3, i) for i in range(3)]
    inv = L.monomial((-1, -1, -1))
    return (t[0] + 1) * (t[1] + 1) * (t[2] + 1) * (inv + 1) * Fraction(-1, 16)


class LaplaceEngine:
    """Memoized evaluator of F_{g,n}; ``store`` is an optional persistent cache
    with ``load(g, n) -> LaurentPolynomial | None`` and ``save(g, n, poly)``."""

    def __init__(self, store=None):
        self._memo: Dict[tuple[int, int], LaurentPolynomial] = {}
        self.store = store

    def F(self, g: int, n: int) -> FPolynomial:
        return FPolynomial(g, n, self.poly(g, n))

    def poly(self, g: int, n: int) -> LaurentPolynomial:
        require_stable(g, n)
        key = (g, n)
        p = self._memo.get(key)
        if p is not None:
            return p
        if self.store is not None:
            p = self.store.load(g, n)
        if p is None:
            p = initial_value(g, n) if (g, n) == (0, 3) else self._compute(g, n)
            if self.store is not None:
                self.store.save(g, n, p)
        self._memo[key] = p
        return p

    # -------------------------------------------------------------- recursion
    def _dF(self, g: int, m: int, which: int, nvars: int, mapping) -> RationalExpression:
        """Partial derivative of F_{g,m} in its variable ``which``, placed in nvars variables."""
        if (g, m) == (0, 2):
            return dF02(nvars, mapping[which], mapping[1 - which])
        return R.from_poly(self.poly(g, m).diff(which).embed(nvars, list(mapping)))

    def rhs(self, g: int, n: int, *, unstable_lines: bool = False) -> RationalExpression:
        """Right-hand side of the recursion for dF_{g,n}/dt_1, before cancellation.

        Lines 1-2 only see stable F_{g,n-1}. With ``unstable_lines=True`` the
        (0,2) derivatives are substituted there as well; that variant leaves
        uncancelled poles at t_1 = -t_j and exists only to document it.
        """
        require_stable(g, n)
        nv = n
        pieces: list[RationalExpression] = []
        t0 = L.variable(nv, 0)
        p3 = _p3(nv, 0)
        p2 = _p2(nv, 0)
        if (g, n) == (0, 3) and not unstable_lines:
            raise UnstableError("F_{0,3} is an initial value, not an output of the recursion")
        if is_stable(g, n - 1) or (unstable_lines and (g, n - 1) == (0, 2)):
            line1 = []
            line2 = []
            for j in range(1, n):
                keep = [0] + [k for k in range(1, n) if k != j]
                dropped_first = list(range(1, n))
                a1 = self._dF(g, n - 1, 0, nv, keep)
                a2 = self._dF(g, n - 1, j - 1, nv, dropped_first)
                tj = L.variable(nv, j)
                pre = R.from_factors(tj, [(t0 - tj, 1), (t0 + tj, 1)])
                line1.append(pre * (a1 * p3 - a2 * _p3(nv, j)))
                line2.append(a1 * p2)
            pieces += [x * Fraction(-1, 16) for x in line1]
            pieces += [x * Fraction(-1, 16) for x in line2]
        if g >= 1:
            if (g - 1, n + 1) == (0, 2):
                diag = R.from_poly(L.variable(nv, 0, -2) * Fraction(1, 4))
            else:
                mixed = self.poly(g - 1, n + 1).diff(0).diff(1)
                diag = R.from_poly(mixed.embed(nv, [0, 0] + list(range(1, n))))
            pieces.append(diag * (p3 * Fraction(-1, 32)))
        rest = list(range(1, n))
        for g1 in range(g + 1):
            g2 = g - g1
            for size in range(len(rest) + 1):
                for I in combinations(rest, size):
                    J = [k for k in rest if k not in I]
                    if not (2 * g1 - 1 + len(I) > 0 and 2 * g2 - 1 + len(J) > 0):
                        continue
                    a = self._dF(g1, len(I) + 1, 0, nv, [0] + list(I))
                    b = self._dF(g2, len(J) + 1, 0, nv, [0] + J)
                    pieces.append(a * b * (p3 * Fraction(-1, 32)))
        return _collect(pieces, nv)

    def dF_dt1(self, g: int, n: int) -> LaurentPolynomial:
        """dF_{g,n}/dt_1 as a Laurent polynomial (poles at t_1 = +-t_j cancelled)."""
        rhs = self.rhs(g, n)
        try:
            return rhs.to_laurent()
        except NotDivisibleError as exc:
            raise PoleCancellationError(f"F_{{{g},{n}}}: {exc}") from exc

    def _compute(self, g: int, n: int) -> LaurentPolynomial:
        log.debug("computing F_{%d,%d}", g, n)
        d1 = self.dF_dt1(g, n)
        try:
            prim = d1.integrate(0)
        except LogTermError as exc:
            raise LogTermError(f"F_{{{g},{n}}}: {exc}") from exc
        return prim - prim.subs_const(0, -1)


def _collect(pieces: list[RationalExpression], nv: int) -> RationalExpression:
    """Sum pieces, cancelling each one's denominator first where it is exact."""
    poly = L.zero(nv)
    leftover = R.constant(nv, 0)
    for p in pieces:
        r = p.reduce()
        if r.den:
            leftover = leftover + r
        else:
            poly = poly + r.num
    return leftover + poly


_default = LaplaceEngine()


def default_engine() -> LaplaceEngine:
    return _default


def configure_store(store) -> None:
    """Attach a persistent store (or None) to the shared engine and drop its memo."""
    _default.store = store
    _default._memo.clear()


def compute_F(g: int, n: int, engine: Optional[LaplaceEngine] = None) -> FPolynomial:
    return (engine or _default).F(g, n)


# ---------------------------------------------------------------- structure

def symmetric(p: LaurentPolynomial) -> bool:
    n = p.nvars
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if p.embed(n, perm) != p:
            return False
    return True


def reciprocal_invariant(p: LaurentPolynomial) -> bool:
    q = p
    for i in range(p.nvars):
        q = q.reciprocal(i)
    return q == p


def vanishes_at_minus_one(p: LaurentPolynomial) -> bool:
    return all(p.subs_const(i, -1).is_zero() for i in range(p.nvars))


def top_part(F: FPolynomial) -> LaurentPolynomial:
    """Homogeneous part of degree 3(2g - 2 + n)."""
    return F.poly.homogeneous_part(F.expected_degree)


def intersection_numbers(g: int, n: int, engine: Optional[LaplaceEngine] = None) -> Dict[tuple[int, ...], Fraction]:
    """<tau_d>_{g,n} read off the top-degree coefficients of F_{g,n}.

    The coefficient of prod t_i^{2d_i+1} is
    (-1)^n 2^{-(2g-2+n)} <tau_d> prod (2d_i - 1)!! / 2^{2d_i+1}.
    """
    F = compute_F(g, n, engine)
    top = top_part(F)
    out: Dict[tuple[int, ...], Fraction] = {}
    for e, c in top.items():
        if any(k < 1 or k % 2 == 0 for k in e):
            raise InvariantViolation(f"top part of F_{{{g},{n}}} has a non-odd exponent {e}")
        d = tuple((k - 1) // 2 for k in e)
        w = Fraction((-1) ** n * 2 ** (2 * g - 2 + n))
        for di in d:
            w *= Fraction(2 ** (2 * di + 1), double_factorial(2 * di - 1))
        out[d] = c * w
    # every admissible index, including those with vanishing value
    for d in _indices(g, n):
        out.setdefault(d, Fraction(0))
    return dict(sorted(out.items()))


def _indices(g: int, n: int):
    total = 3 * g - 3 + n
    for d in product(range(total + 1), repeat=n):
        if sum(d) == total:
            yield d


def dvv_oracle(g: int, d) -> Fraction:
    return dvv(g, d)


def principal_specialize(F: FPolynomial) -> LaurentPolynomial:
    """F(t, ..., t) rewritten as a polynomial in s = (t + 1)^2 / (4t).

    Uses t^k + t^-k = V_k(u) with u = t + 1/t (V_0 = 2, V_1 = u,
    V_k = u V_{k-1} - V_{k-2}) and u = 4s - 2.
    """
    diag = F.poly.embed(1, [0] * F.n)
    coeffs = {e[0]: c for e, c in diag.terms.items()}
    for k, c in coeffs.items():
        if coeffs.get(-k, 0) != c:
            raise InvariantViolation(f"F_{{{F.g},{F.n}}}(t,...,t) is not reciprocal-symmetric")
    top = max((abs(k) for k in coeffs), default=0)
    u = L.from_univariate({0: -2, 1: 4})
    V = [L.constant(1, 2), u]
    while len(V) <= top:
        V.append(u * V[-1] - V[-2])
    out = L.constant(1, coeffs.get(0, 0))
    for k in range(1, top + 1):
        c = coeffs.get(k, 0)
        if c:
            out = out + V[k] * c
    if not out.is_polynomial():
        raise InvariantViolation("principal specialization is not a polynomial in s")
    return out


def euler_characteristic(g: int, n: int, engine: Optional[LaplaceEngine] = None) -> Fraction:
    """(-1)^n F_{g,n}(1, ..., 1)."""
    F = compute_F(g, n, engine)
    return (-1) ** n * F.poly.evaluate([1] * n)


def harer_zagier(g: int, n: int) -> Fraction:
    return euler_characteristic_mgn(g, n)


# ---------------------------------------------------------------- Laplace series

def laplace_series_mismatches(g: int, n: int, order: int,
                              engine: Optional[LaplaceEngine] = None) -> list[tuple[tuple[int, ...], Fraction, Fraction]]:
    """Compare F(t(x_1), ..., t(x_n)) expanded at x = infinity against D_{g,n}.

    Returns (mu, series coefficient, D_{g,n}(mu)) for every disagreement with
    sum(mu) <= order; multi-indices with a zero entry must have coefficient 0.
    """
    F = compute_F(g, n, engine)
    T = t_series_at_infinity(order)
    cache: Dict[int, PowerSeries] = {}

    def power(e: int) -> PowerSeries:
        if e not in cache:
            cache[e] = T ** e
        return cache[e]

    bad = []
    terms = list(F.poly.terms.items())
    for mu in product(range(order + 1), repeat=n):
        if sum(mu) > order:
            continue
        got = Fraction(0)
        for e, c in terms:
            term = c
            for k, m in zip(e, mu):
                term *= power(k)[m]
                if not term:
                    break
            got += term
        want = Fraction(0) if 0 in mu else d_gn(g, mu)
        if got != want:
            bad.append((mu, got, want))
    return bad


def laplace_series_check(g: int, n: int, order: int, engine: Optional[LaplaceEngine] = None) -> bool:
    bad = laplace_series_mismatches(g, n, order, engine)
    for mu, got, want in bad[:10]:
        log.warning("F_{%d,%d}: coefficient at mu=%s is %s, expected D=%s", g, n, mu, got, want)
    return not bad


def stable_cells(level: int) -> list[tuple[int, int]]:
    """All stable (g, n) with 2g - 2 + n <= level, ordered by 2g - 2 + n."""
    cells = []
    for chi in range(1, level + 1):
        for g in range(0, (chi + 2) // 2 + 1):
            n = chi + 2 - 2 * g
            if n >= 1:
                cells.append((g, n))
    return cells


def structural_report(g: int, n: int, engine: Optional[LaplaceEngine] = None) -> Dict[str, bool]:
    """Every structural property of F_{g,n}, keyed by a short name."""
    F = compute_F(g, n, engine)
    p = F.poly
    out = {
        "symmetric": symmetric(p),
        "reciprocal": reciprocal_invariant(p),
        "degree": p.degree() == F.expected_degree,
        "vanishes_at_minus_one": vanishes_at_minus_one(p),
    }
    try:
        principal_specialize(F)
        out["s_polynomial"] = True
    except InvariantViolation:
        out["s_polynomial"] = False
    out["euler_characteristic"] = euler_characteristic(g, n, engine) == harer_zagier(g, n)
    return out
