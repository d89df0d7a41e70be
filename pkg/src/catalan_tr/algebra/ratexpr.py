"""Quotients of Laurent polynomials.

The denominator is kept as a product of normalized polynomial factors with
positive multiplicities (monomials and scalars are folded into the numerator,
which is a Laurent polynomial). Keeping the factorization that the caller
supplied makes pole bookkeeping cheap: common denominators are formed from
factor multiplicities rather than by expanding products, and cancellation is
attempted factor by factor.

Equality never relies on canonical forms; it cross-multiplies.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .laurent import (
    DomainError,
    LaurentPolynomial,
    NotDivisibleError,
    Scalar,
    poly_gcd_univariate,
)

FactorList = Tuple[Tuple[LaurentPolynomial, int], ...]


def _factor_key(q: LaurentPolynomial):
    return tuple(sorted(q.terms.items()))


class RationalExpression:
    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial | Scalar,
                 den: LaurentPolynomial | Scalar | None = None, *, nvars: int | None = None):
        if not isinstance(num, LaurentPolynomial):
            if nvars is None:
                if isinstance(den, LaurentPolynomial):
                    nvars = den.nvars
                else:
                    raise ValueError("nvars is required for a scalar numerator")
            num = LaurentPolynomial.constant(nvars, num)
        factors: list[tuple[LaurentPolynomial, int]] = []
        if den is not None:
            if not isinstance(den, LaurentPolynomial):
                den = LaurentPolynomial.constant(num.nvars, den)
            factors.append((den, 1))
        num, fac = _normalize(num, factors)
        self.num = num
        self.den = fac

    @classmethod
    def _raw(cls, num: LaurentPolynomial, den: FactorList) -> "RationalExpression":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def from_factors(cls, num: LaurentPolynomial,
                     factors: Iterable[tuple[LaurentPolynomial, int]]) -> "RationalExpression":
        n, f = _normalize(num, list(factors))
        return cls._raw(n, f)

    @classmethod
    def from_poly(cls, p: LaurentPolynomial) -> "RationalExpression":
        return cls._raw(p, ())

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "RationalExpression":
        return cls._raw(LaurentPolynomial.constant(nvars, c), ())

    @property
    def nvars(self) -> int:
        return self.num.nvars

    # ------------------------------------------------------------------ queries
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        """True when the (reduced) denominator is trivial."""
        return not self.reduce().den

    def to_laurent(self) -> LaurentPolynomial:
        r = self.reduce()
        if r.den:
            raise NotDivisibleError(
                "expression has a genuine denominator: " + ", ".join(str(q) for q, _ in r.den))
        return r.num

    def denominator(self) -> LaurentPolynomial:
        """Expanded denominator polynomial (product of the stored factors)."""
        d = LaurentPolynomial.constant(self.nvars, 1)
        for q, e in self.den:
            d = d * q ** e
        return d

    def factors(self) -> FactorList:
        return self.den

    def __repr__(self) -> str:
        return f"RationalExpression({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        r = self.reduce()
        if not r.den:
            return str(r.num)
        den = "*".join(f"({q})" if e == 1 else f"({q})^{e}" for q, e in r.den)
        return f"({r.num}) / {den}"

    # ------------------------------------------------------------------ arithmetic
    def _coerce(self, other) -> "RationalExpression":
        if isinstance(other, RationalExpression):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return RationalExpression._raw(other, ())
        if isinstance(other, (int, Fraction)):
            return RationalExpression.constant(self.nvars, other)
        return NotImplemented

    def __neg__(self) -> "RationalExpression":
        return RationalExpression._raw(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RationalExpression._raw(self.num + other.num, self.den)
        common, ma, mb = _lcm(self.den, other.den)
        num = self.num * ma + other.num * mb
        return RationalExpression._raw(num, common)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalExpression._raw(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RationalExpression._raw(LaurentPolynomial.zero(self.nvars), ())
        merged: Dict = {}
        for q, e in self.den + other.den:
            k = _factor_key(q)
            if k in merged:
                merged[k] = (q, merged[k][1] + e)
            else:
                merged[k] = (q, e)
        return RationalExpression._raw(self.num * other.num, _sorted_factors(merged.values()))

    __rmul__ = __mul__

    def inverse(self) -> "RationalExpression":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational expression")
        return RationalExpression.from_factors(self.denominator(), [(self.num, 1)])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational expression")
        num = self.num * other.denominator()
        return RationalExpression.from_factors(num, list(self.den) + [(other.num, 1)])

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int) -> "RationalExpression":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalExpression._raw(self.num ** k, tuple((q, e * k) for q, e in self.den) if k else ())

    def __eq__(self, other) -> bool:
        other = self._coerce(other) if not isinstance(other, RationalExpression) else other
        if other is NotImplemented:
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if self.den == other.den:
            return self.num == other.num
        _, ma, mb = _lcm(self.den, other.den)
        return self.num * ma == other.num * mb

    __hash__ = None

    # ------------------------------------------------------------------ reduction
    def reduce(self) -> "RationalExpression":
        """Cancel denominator factors that divide the numerator.

        In one variable the factors are first split against the numerator by
        polynomial gcd, so the result is fully reduced.
        """
        if not self.den:
            return self
        if self.num.is_zero():
            return RationalExpression._raw(self.num, ())
        num = self.num
        factors = list(self.den)
        if self.nvars == 1:
            factors = _split_univariate(num, factors)
        kept = []
        for q, e in factors:
            while e:
                try:
                    num = num.div_exact(q)
                except NotDivisibleError:
                    break
                e -= 1
            if e:
                kept.append((q, e))
        num, fac = _normalize(num, kept)
        return RationalExpression._raw(num, fac)

    # ------------------------------------------------------------------ evaluation / substitution
    def evaluate(self, point: Sequence[Scalar] | Scalar) -> Fraction:
        if isinstance(point, (int, Fraction)):
            point = (point,)
        d = Fraction(1)
        for q, e in self.den:
            v = q.evaluate(point)
            if not v:
                r = self.reduce()
                if r is not self and r.den != self.den:
                    return r.evaluate(point)
                raise DomainError("evaluation at a pole of the rational expression")
            d *= v ** e
        return self.num.evaluate(point) / d

    __call__ = evaluate

    def _map(self, fn) -> "RationalExpression":
        return RationalExpression.from_factors(fn(self.num), [(fn(q), e) for q, e in self.den])

    def reciprocal(self, i: int) -> "RationalExpression":
        return self._map(lambda p: p.reciprocal(i))

    def scale_var(self, i: int, c: Scalar) -> "RationalExpression":
        return self._map(lambda p: p.scale_var(i, c))

    def subs_var(self, i: int, j: int) -> "RationalExpression":
        return self._map(lambda p: p.subs_var(i, j))

    def embed(self, nvars: int, mapping: Sequence[int]) -> "RationalExpression":
        num = self.num.embed(nvars, mapping)
        facs = [(q.embed(nvars, mapping), e) for q, e in self.den]
        return RationalExpression.from_factors(num, facs)

    def subs_const(self, i: int, value: Scalar) -> "RationalExpression":
        r = self
        for q, _ in self.den:
            if q.subs_const(i, value).is_zero():
                r = self.reduce()
                break
        facs = []
        for q, e in r.den:
            v = q.subs_const(i, value)
            if v.is_zero():
                raise DomainError(f"t{i + 1} = {value} is a pole")
            facs.append((v, e))
        return RationalExpression.from_factors(r.num.subs_const(i, value), facs)

    def diff(self, i: int) -> "RationalExpression":
        """Quotient-rule derivative with respect to t_i."""
        involved = [(q, e) for q, e in self.den if any(x[i] for x in q.terms)]
        if not involved:
            return RationalExpression._raw(self.num.diff(i), self.den)
        prod = LaurentPolynomial.constant(self.nvars, 1)
        for q, _ in involved:
            prod = prod * q
        num = self.num.diff(i) * prod
        for q, e in involved:
            rest = LaurentPolynomial.constant(self.nvars, 1)
            for q2, _ in involved:
                if q2 is not q:
                    rest = rest * q2
            num = num - self.num * q.diff(i) * rest * e
        bump = {_factor_key(q) for q, _ in involved}
        facs = [(q, e + 1 if _factor_key(q) in bump else e) for q, e in self.den]
        return RationalExpression._raw(num, tuple(facs))

    def compose_univariate(self, sub: "RationalExpression") -> "RationalExpression":
        """For a one-variable expression f(t), return f(sub) where sub is any
        rational expression (in its own variables)."""
        if self.nvars != 1:
            raise ValueError("compose_univariate needs a one-variable expression")
        return evaluate_laurent_at(self.num, sub) / _product(
            [evaluate_laurent_at(q, sub) ** e for q, e in self.den], sub.nvars)


def _product(items: Sequence[RationalExpression], nvars: int) -> RationalExpression:
    acc = RationalExpression.constant(nvars, 1)
    for it in items:
        acc = acc * it
    return acc


def evaluate_laurent_at(p: LaurentPolynomial, sub: RationalExpression) -> RationalExpression:
    """Substitute a rational expression for the single variable of ``p``."""
    if p.nvars != 1:
        raise ValueError("evaluate_laurent_at needs a one-variable polynomial")
    nv = sub.nvars
    if p.is_zero():
        return RationalExpression.constant(nv, 0)
    lo = min(0, p.min_exp(0))
    hi = max(0, p.max_exp(0))
    # common denominator sub^lo handled through the inverse
    pos = {}
    acc = RationalExpression.constant(nv, 0)
    power = RationalExpression.constant(nv, 1)
    for k in range(0, hi + 1):
        if k:
            power = power * sub
        pos[k] = power
    inv = sub.inverse() if lo < 0 else None
    power = RationalExpression.constant(nv, 1)
    neg = {}
    for k in range(1, -lo + 1):
        power = power * inv
        neg[-k] = power
    for (k,), c in p.terms.items():
        acc = acc + (pos[k] if k >= 0 else neg[k]) * c
    return acc.reduce() if nv == 1 else acc


def _normalize(num: LaurentPolynomial,
               factors: list[tuple[LaurentPolynomial, int]]) -> tuple[LaurentPolynomial, FactorList]:
    """Fold scalars/monomials of the factors into the numerator and merge duplicates."""
    nv = num.nvars
    merged: Dict = {}
    for f, e in factors:
        if e == 0:
            continue
        if f.nvars != nv:
            raise ValueError("factor has the wrong number of variables")
        if f.is_zero():
            raise ZeroDivisionError("zero denominator")
        c, m, q = f.normalize_factor()
        num = num.mul_monomial(tuple(-k * e for k in m), Fraction(1) / c ** e)
        if q.is_constant():
            continue
        k = _factor_key(q)
        if k in merged:
            merged[k] = (q, merged[k][1] + e)
        else:
            merged[k] = (q, e)
    out = []
    for q, e in merged.values():
        if e > 0:
            out.append((q, e))
        elif e < 0:
            num = num * q ** (-e)
    return num, _sorted_factors(out)


def _sorted_factors(items: Iterable[tuple[LaurentPolynomial, int]]) -> FactorList:
    return tuple(sorted(items, key=lambda it: _factor_key(it[0])))


def _lcm(a: FactorList, b: FactorList):
    """Least common multiple of two factor lists and the two multipliers."""
    da = {_factor_key(q): (q, e) for q, e in a}
    db = {_factor_key(q): (q, e) for q, e in b}
    common = {}
    for k in set(da) | set(db):
        q = (da.get(k) or db.get(k))[0]
        common[k] = (q, max(da.get(k, (q, 0))[1], db.get(k, (q, 0))[1]))
    nv = (a or b)[0][0].nvars
    ma = LaurentPolynomial.constant(nv, 1)
    mb = LaurentPolynomial.constant(nv, 1)
    for k, (q, e) in common.items():
        ea = e - da.get(k, (q, 0))[1]
        eb = e - db.get(k, (q, 0))[1]
        if ea:
            ma = ma * q ** ea
        if eb:
            mb = mb * q ** eb
    return _sorted_factors(common.values()), ma, mb


def _split_univariate(num: LaurentPolynomial, factors: list) -> list:
    """Split one-variable factors along their gcd with the numerator."""
    m = num.min_exp(0)
    base = num.mul_monomial((-m,)) if m else num
    out = []
    todo = list(factors)
    while todo:
        q, e = todo.pop()
        g = poly_gcd_univariate(base, q)
        if g.is_constant() or g == q:
            out.append((q, e))
            continue
        h = q.div_exact(g)
        todo.append((g, e))
        todo.append((h, e))
    return out


INFINITY = "infinity"


def residue(f: RationalExpression, var: int, point) -> RationalExpression:
    """Residue of f(...) dt_var at t_var = point.

    ``point`` is a scalar, a Laurent polynomial free of t_var, or
    :data:`INFINITY`. The residue at infinity follows the convention
    res_inf f = -res_{u=0} f(1/u) / u^2, so that all residues sum to zero.
    The result is an expression in the remaining variables.
    """
    nv = f.nvars
    if point == INFINITY:
        g = f.reciprocal(var) * LaurentPolynomial.variable(nv, var, -2)
        return -residue(g, var, 0)
    if not isinstance(point, LaurentPolynomial):
        point = LaurentPolynomial.constant(nv, point)
    if var in point.variables():
        raise ValueError("residue point must not depend on the integration variable")
    if f.num.is_zero():
        return RationalExpression.constant(nv, 0)

    num = f.num
    pieces: list[tuple[LaurentPolynomial, int]] = list(f.den)
    lo = num.min_exp(var)
    if lo < 0:
        shift = [0] * nv
        shift[var] = -lo
        num = num.mul_monomial(shift)
        pieces.append((LaurentPolynomial.variable(nv, var), -lo))

    order = 0
    cofactors = []
    for q, e in pieces:
        g = q.shift_var(var, point)
        mult = g.min_exp(var)
        if mult:
            shift = [0] * nv
            shift[var] = -mult
            g = g.mul_monomial(shift)
        order += mult * e
        cofactors.append((g, e))
    if order == 0:
        return RationalExpression.constant(nv, 0)
    K = order - 1

    def coeffs(p: LaurentPolynomial) -> list[LaurentPolynomial]:
        parts = p.coefficients_in(var)
        zero = LaurentPolynomial.zero(nv)
        return [parts.get(k, zero) for k in range(K + 1)]

    series = coeffs(num.shift_var(var, point))
    den_factors = []
    for g, e in cofactors:
        h = coeffs(g)
        h0 = h[0]
        # 1/h = sum c_m u^m / h0^(K+1)
        c = [LaurentPolynomial.constant(nv, 1)]
        for m in range(1, K + 1):
            acc = LaurentPolynomial.zero(nv)
            for k in range(1, m + 1):
                if not h[k].is_zero():
                    acc = acc + h[k] * c[m - k] * h0 ** (k - 1)
            c.append(-acc)
        inv = [c[m] * h0 ** (K - m) for m in range(K + 1)]
        for _ in range(e):
            series = _trunc_mul(series, inv, K, nv)
        den_factors.append((h0, e * (K + 1)))
    res = RationalExpression.from_factors(series[K], den_factors)
    return res.reduce()


def _trunc_mul(a: list, b: list, K: int, nv: int) -> list:
    out = []
    for m in range(K + 1):
        acc = LaurentPolynomial.zero(nv)
        for k in range(m + 1):
            if not a[k].is_zero() and not b[m - k].is_zero():
                acc = acc + a[k] * b[m - k]
        out.append(acc)
    return out


def finite_poles(f: RationalExpression, var: int) -> list[LaurentPolynomial]:
    """Distinct finite poles in t_var, located through factors linear in t_var.

    A denominator factor of higher degree in t_var raises DomainError, since
    its roots are not expressible in the coefficient ring.
    """
    r = f.reduce()
    nv = f.nvars
    found: Dict = {}
    if not r.num.is_zero() and r.num.min_exp(var) < 0:
        z = LaurentPolynomial.zero(nv)
        found[_factor_key(z)] = z
    for q, _ in r.den:
        parts = q.coefficients_in(var)
        deg = max(parts)
        if deg == 0:
            continue
        if deg > 1 and q.variables() == {var}:
            roots = _rational_roots(q, var)
            if sum(roots.values()) < deg:
                raise DomainError(f"factor {q} has irrational roots in t{var + 1}")
            for root in roots:
                p = LaurentPolynomial.constant(nv, root)
                found[_factor_key(p)] = p
            continue
        if deg > 1:
            raise DomainError(f"factor {q} is not linear in t{var + 1}")
        a = parts[1]
        b = parts.get(0, LaurentPolynomial.zero(nv))
        if not a.is_monomial():
            raise DomainError(f"root of {q} is not a Laurent polynomial")
        root = -b.div_exact(a)
        found[_factor_key(root)] = root
    return list(found.values())


def residue_sum(f: RationalExpression, var: int, points: Iterable) -> RationalExpression:
    total = RationalExpression.constant(f.nvars, 0)
    for p in points:
        total = total + residue(f, var, p)
    return total.reduce()


def _rational_roots(q: LaurentPolynomial, var: int) -> Dict[Fraction, int]:
    """Rational roots (with multiplicity) of a polynomial in t_var alone."""
    from math import lcm

    coeffs = {k: c.constant_term() for k, c in q.coefficients_in(var).items()}
    scale = lcm(*(c.denominator for c in coeffs.values()))
    ints = {k: int(c * scale) for k, c in coeffs.items()}
    low = min(ints)
    roots: Dict[Fraction, int] = {}
    if low > 0:
        roots[Fraction(0)] = low
    lead = abs(ints[max(ints)])
    const = abs(ints[low])
    cands = {Fraction(s * p, d) for p in _divisors(const) for d in _divisors(lead) for s in (1, -1)}
    p = LaurentPolynomial.from_univariate({k - low: v for k, v in ints.items()})
    for r in sorted(cands):
        lin_f = LaurentPolynomial.from_univariate({0: -r, 1: 1})
        while len(p.terms) > 1 or not p.is_constant():
            if p.is_constant():
                break
            quo, rem = p.quo_rem_univariate(lin_f)
            if not rem.is_zero():
                break
            roots[r] = roots.get(r, 0) + 1
            p = quo
    return roots


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0] if n else [1]
