"""Eynard-Orantin differentials of the Catalan curve and their residue recursion.

A form W_{g,n} is stored as its coefficient function in the global
coordinate t, so W = w(t_1, ..., t_n) dt_1 ... dt_n. For stable (g, n) the
coefficient is the mixed derivative of F_{g,n}; (0,1) and (0,2) come from
the unstable data.

The right-hand side of the recursion is a rational function of t (the
integration variable, kept as variable 0) times the kernel. The contour is
evaluated as the sum of residues at t = +-t_j, j = 1..n, and cross-checked
against minus the residues at t = 0 and t = infinity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .algebra import INFINITY, LaurentPolynomial, RationalExpression, lin, residue
from .laplace import InvariantViolation, LaplaceEngine, default_engine, is_stable, require_stable
from .spectral import w01_coefficient, w02_coefficient

L = LaurentPolynomial
R = RationalExpression

# slot descriptors for placing a form's arguments in the integrand ring:
# ("t", +1) is t, ("t", -1) is -t, and an int k is the variable t_k.
Slot = object


@dataclass(frozen=True)
class EODifferential:
    g: int
    n: int
    coefficient: RationalExpression

    def __eq__(self, other) -> bool:
        if not isinstance(other, EODifferential):
            return NotImplemented
        return (self.g, self.n) == (other.g, other.n) and self.coefficient == other.coefficient

    __hash__ = None


class EOMismatch(InvariantViolation):
    """The two sides of the residue recursion differ."""


def kernel(nvars: int = 2, t: int = 0, t1: int = 1) -> RationalExpression:
    """K(t, t_1) = -(1/64)(1/(t + t_1) + 1/(t - t_1)) (t^2 - 1)^3 / t^2."""
    tv = L.variable(nvars, t)
    num = (tv * tv - 1) ** 3 * Fraction(-1, 32)
    return R.from_factors(num, [(tv, 1), (lin(nvars, {t: 1, t1: -1}), 1),
                                (lin(nvars, {t: 1, t1: 1}), 1)])


def _stable_coefficient(g: int, n: int, engine: LaplaceEngine) -> LaurentPolynomial:
    p = engine.poly(g, n)
    for i in range(n):
        p = p.diff(i)
    return p


def w_gn(g: int, n: int, engine: Optional[LaplaceEngine] = None) -> EODifferential:
    """W_{g,n} as a coefficient of dt_1 ... dt_n."""
    engine = engine or default_engine()
    if (g, n) == (0, 1):
        return EODifferential(0, 1, w01_coefficient())
    if (g, n) == (0, 2):
        return EODifferential(0, 2, w02_coefficient())
    require_stable(g, n)
    return EODifferential(g, n, R.from_poly(_stable_coefficient(g, n, engine)))


def _place(p: LaurentPolynomial, slots: Sequence[Slot], nvars: int) -> LaurentPolynomial:
    """Substitute the arguments of a form into the integrand ring."""
    out: dict = {}
    for e, c in p.terms.items():
        ne = [0] * nvars
        for k, s in zip(e, slots):
            if isinstance(s, tuple):
                ne[0] += k
                if s[1] < 0 and k % 2:
                    c = -c
            else:
                ne[s] += k
        key = tuple(ne)
        out[key] = out.get(key, 0) + c
    return L(nvars, out)


class EORecursion:
    """Assembles and evaluates the residue recursion for W_{g,n}.

    Variable 0 is the integration variable t; variables 1..n are t_1..t_n.
    """

    def __init__(self, engine: Optional[LaplaceEngine] = None, *, w02_reading: str = "C"):
        if w02_reading not in ("C", "bergman"):
            raise ValueError("w02_reading must be 'C' or 'bergman'")
        self.engine = engine or default_engine()
        self.w02_reading = w02_reading

    def _w(self, g: int, m: int, slots: Sequence[Slot], nv: int) -> RationalExpression:
        if (g, m) == (0, 2):
            lin_terms: dict = {}
            for s in slots:
                if isinstance(s, tuple):
                    lin_terms[0] = lin_terms.get(0, 0) + s[1]
                else:
                    lin_terms[s] = lin_terms.get(s, 0) + 1
            return R.from_factors(L.constant(nv, 1), [(lin(nv, lin_terms), 2)])
        return R.from_poly(_place(_stable_coefficient(g, m, self.engine), slots, nv))

    def _w02_pair(self, sign: int, j: int, nv: int, second: bool) -> RationalExpression:
        """W_{0,2}(sign*t, t_j); the second slot of each pair may use the Bergman reading."""
        if second and self.w02_reading == "bergman":
            # 1/(u - t_j)^2 at u = sign*t
            return R.from_factors(L.constant(nv, 1), [(lin(nv, {0: sign, j: -1}), 2)])
        return R.from_factors(L.constant(nv, 1), [(lin(nv, {0: sign, j: 1}), 2)])

    def integrand(self, g: int, n: int) -> RationalExpression:
        """Bracketed sum of the recursion, a rational function of t, t_2, ..., t_n."""
        total = R.constant(n + 1, 0)
        for p in self.pieces(g, n):
            total = total + p
        return total

    def pieces(self, g: int, n: int) -> list[RationalExpression]:
        """The terms of the bracketed sum, kept apart so residues can be taken termwise."""
        require_stable(g, n)
        nv = n + 1
        pieces: list[RationalExpression] = []
        rest = list(range(2, n + 1))
        if is_stable(g, n - 1) or (g, n - 1) == (0, 2):
            # for (0,3) both factors are W_{0,2}, and j and its partner produce
            # the same pair of products, so each is counted with weight 1/2
            w = Fraction(1, 2) if (g, n - 1) == (0, 2) else Fraction(1)
            for j in rest:
                others = [k for k in rest if k != j]
                a = self._w(g, n - 1, [("t", -1)] + others, nv)
                b = self._w(g, n - 1, [("t", 1)] + others, nv)
                pieces.append(self._w02_pair(1, j, nv, False) * a * w)
                pieces.append(self._w02_pair(-1, j, nv, True) * b * w)
        if g >= 1:
            if (g - 1, n + 1) == (0, 2):
                # the Bergman part of W_{0,2} at (t, -t): 1/(2t)^2
                pieces.append(R(L.constant(nv, 1), L.variable(nv, 0, 2) * 4))
            else:
                pieces.append(self._w(g - 1, n + 1, [("t", 1), ("t", -1)] + rest, nv))
        for g1 in range(g + 1):
            g2 = g - g1
            for size in range(len(rest) + 1):
                for I in combinations(rest, size):
                    J = [k for k in rest if k not in I]
                    if not (is_stable(g1, len(I) + 1) and is_stable(g2, len(J) + 1)):
                        continue
                    a = self._w(g1, len(I) + 1, [("t", 1)] + list(I), nv)
                    b = self._w(g2, len(J) + 1, [("t", -1)] + J, nv)
                    pieces.append(a * b)
        return pieces

    def full_integrand(self, g: int, n: int) -> RationalExpression:
        nv = n + 1
        return kernel(nv, 0, 1) * self.integrand(g, n)

    def rhs_near(self, g: int, n: int) -> RationalExpression:
        """Sum of residues at t = +-t_j, j = 1..n, taken term by term."""
        nv = n + 1
        K = kernel(nv, 0, 1)
        total = R.constant(nv, 0)
        for piece in self.pieces(g, n):
            f = K * piece
            for j in range(1, n + 1):
                for s in (1, -1):
                    if _has_pole(f, j, s):
                        total = total + residue(f, 0, L.variable(nv, j) * s)
        return _drop_t(total.reduce(), n)

    def rhs_far(self, g: int, n: int) -> RationalExpression:
        """Minus the residues at t = 0 and t = infinity."""
        f = self.full_integrand(g, n)
        total = residue(f, 0, 0) + residue(f, 0, INFINITY)
        return _drop_t((-total).reduce(), n)

    def poles_at_plus_minus_one(self, g: int, n: int) -> bool:
        f = self.full_integrand(g, n).reduce()
        den = f.denominator()
        nv = n + 1
        return any(den.multiplicity(lin(nv, {0: 1}, c)) > 0 for c in (1, -1))


def _has_pole(f: RationalExpression, j: int, sign: int) -> bool:
    """Whether a denominator factor of f is a multiple of t - sign*t_j."""
    target = lin(f.nvars, {0: 1, j: -sign})
    return any(target.divides(q) for q, _ in f.den)


def _drop_t(expr: RationalExpression, n: int) -> RationalExpression:
    if 0 in expr.num.variables() or any(0 in q.variables() for q, _ in expr.den):
        raise InvariantViolation("residue still depends on the integration variable")
    return expr.embed(n, [0] + list(range(n)))


def eo_rhs(g: int, n: int, engine: Optional[LaplaceEngine] = None, *,
           w02_reading: str = "C") -> EODifferential:
    """Right-hand side of the recursion, evaluated by both residue strategies."""
    rec = EORecursion(engine, w02_reading=w02_reading)
    if rec.poles_at_plus_minus_one(g, n):
        raise InvariantViolation(f"integrand for ({g},{n}) has a pole at t = +-1")
    near = rec.rhs_near(g, n)
    far = rec.rhs_far(g, n)
    if near != far:
        raise EOMismatch(f"({g},{n}): residues at +-t_j give {near}, at 0 and infinity {far}")
    return EODifferential(g, n, near)


def verify_eo(g: int, n: int, engine: Optional[LaplaceEngine] = None) -> bool:
    lhs = w_gn(g, n, engine)
    rhs = eo_rhs(g, n, engine)
    return lhs.coefficient == rhs.coefficient
