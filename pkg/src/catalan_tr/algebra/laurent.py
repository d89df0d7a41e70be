"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A polynomial in ``nvars`` variables is a map from integer exponent tuples
(entries may be negative) to nonzero :class:`fractions.Fraction` values.
Zero coefficients are never stored, so two polynomials are equal exactly
when their term maps are equal.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class AlgebraError(ArithmeticError):
    """Base class for exact-algebra failures."""


class DomainError(AlgebraError):
    """Evaluation or substitution hit a pole, or an operation is undefined."""


class LogTermError(AlgebraError):
    """An antiderivative would need a logarithm (nonzero t^-1 coefficient)."""


class NotDivisibleError(AlgebraError):
    """Exact division was requested but leaves a remainder."""


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple([x + y for x, y in zip(a, b)])


class LaurentPolynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Scalar] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self.nvars = nvars
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                if c:
                    clean[tuple(e)] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "LaurentPolynomial":
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # ------------------------------------------------------------------ builders
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "LaurentPolynomial":
        c = Fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: Scalar = 1) -> "LaurentPolynomial":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "LaurentPolynomial":
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def from_univariate(cls, coeffs: Mapping[int, Scalar] | Sequence[Scalar],
                        nvars: int = 1, var: int = 0) -> "LaurentPolynomial":
        """Build from ``{exponent: coeff}`` (or a dense list starting at t^0) in one variable."""
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        terms = {}
        for k, c in coeffs.items():
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = c
        return cls(nvars, terms)

    # ------------------------------------------------------------------ basics
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical (lexicographic by exponent) order."""
        return sorted(self.terms.items())

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentPolynomial.constant(self.nvars, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.nvars}, {{{self._fmt_terms()}}})"

    def _fmt_terms(self) -> str:
        return ", ".join(f"{e}: {c}" for e, c in self.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"t{i + 1}" for i in range(self.nvars)] if self.nvars > 1 else ["t"]
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda it: (-sum(it[0]), tuple(-x for x in it[0]))):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" if k > 0 else f"{n}^({k})"
                for n, k in zip(names, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.nvars, other)
        return NotImplemented

    # ------------------------------------------------------------------ ring ops
    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPolynomial._raw(self.nvars, out)

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
            if not other:
                return LaurentPolynomial.zero(self.nvars)
            other = Fraction(other)
            return LaurentPolynomial._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exponent, Fraction] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        return LaurentPolynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, LaurentPolynomial):
            return self.div_exact(other)
        return NotImplemented

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise DomainError("negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPolynomial._raw(self.nvars, {tuple(x * k for x in e): c ** k})
        result = LaurentPolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exp: Sequence[int], c: Scalar = 1) -> "LaurentPolynomial":
        c = Fraction(c)
        if not c:
            return LaurentPolynomial.zero(self.nvars)
        exp = tuple(exp)
        return LaurentPolynomial._raw(
            self.nvars, {_add_exp(e, exp): v * c for e, v in self.terms.items()})

    # ------------------------------------------------------------------ degrees
    def degree(self) -> int:
        """Maximal total degree (sum of exponents) over the terms."""
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return min(sum(e) for e in self.terms)

    def homogeneous_part(self, d: int) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def max_exp(self, i: int) -> int:
        return max(e[i] for e in self.terms)

    def min_exp(self, i: int) -> int:
        return min(e[i] for e in self.terms)

    def min_exps(self) -> Exponent:
        return tuple(min(col) for col in zip(*self.terms)) if self.terms else (0,) * self.nvars

    def variables(self) -> set[int]:
        """Indices of the variables that actually occur."""
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return used

    def is_polynomial(self) -> bool:
        """True when no exponent is negative."""
        return all(k >= 0 for e in self.terms for k in e)

    def coefficients_in(self, i: int) -> Dict[int, "LaurentPolynomial"]:
        """Split as sum_k c_k * t_i^k; each c_k keeps ``nvars`` but is free of t_i."""
        parts: Dict[int, Dict[Exponent, Fraction]] = {}
        for e, c in self.terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: LaurentPolynomial._raw(self.nvars, t) for k, t in parts.items()}

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    # ------------------------------------------------------------------ calculus
    def diff(self, i: int) -> "LaurentPolynomial":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return LaurentPolynomial._raw(self.nvars, out)

    def integrate(self, i: int) -> "LaurentPolynomial":
        """Termwise antiderivative in t_i with zero constant of integration."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == -1:
                raise LogTermError(f"nonzero t{i + 1}^-1 coefficient; primitive is not Laurent")
            out[e[:i] + (k + 1,) + e[i + 1:]] = c / (k + 1)
        return LaurentPolynomial._raw(self.nvars, out)

    # ------------------------------------------------------------------ substitution
    def evaluate(self, point: Sequence[Scalar] | Scalar) -> Fraction:
        if isinstance(point, (int, Fraction)):
            point = (point,)
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(pt, e):
                if k:
                    if not v and k < 0:
                        raise DomainError("evaluation at a pole (zero raised to a negative power)")
                    term *= v ** k
            total += term
        return total

    __call__ = evaluate

    def subs_const(self, i: int, value: Scalar) -> "LaurentPolynomial":
        """Set t_i = value. The result keeps ``nvars`` but no longer involves t_i."""
        value = Fraction(value)
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < 0 and not value:
                raise DomainError(f"t{i + 1} = 0 substituted into a negative power")
            ne = e[:i] + (0,) + e[i + 1:]
            out[ne] = out.get(ne, 0) + c * value ** k
        return LaurentPolynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    def reciprocal(self, i: int) -> "LaurentPolynomial":
        """Substitute t_i -> 1/t_i."""
        return LaurentPolynomial._raw(
            self.nvars, {e[:i] + (-e[i],) + e[i + 1:]: c for e, c in self.terms.items()})

    def scale_var(self, i: int, factor: Scalar) -> "LaurentPolynomial":
        """Substitute t_i -> factor * t_i."""
        factor = Fraction(factor)
        if not factor:
            raise DomainError("scaling a variable by zero")
        return LaurentPolynomial._raw(
            self.nvars, {e: c * factor ** e[i] for e, c in self.terms.items()})

    def subs_var(self, i: int, j: int) -> "LaurentPolynomial":
        """Substitute t_i -> t_j (both stay in the same variable set)."""
        mapping = list(range(self.nvars))
        mapping[i] = j
        return self.embed(self.nvars, mapping)

    def embed(self, nvars: int, mapping: Sequence[int]) -> "LaurentPolynomial":
        """Move variable k to position ``mapping[k]`` of an ``nvars``-variable ring.

        The map need not be injective; colliding variables multiply together,
        which is how diagonal restrictions like F(u, u, ...) are formed.
        """
        if len(mapping) != self.nvars:
            raise ValueError("mapping must cover every variable")
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for k, m in zip(e, mapping):
                ne[m] += k
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
        return LaurentPolynomial._raw(nvars, {e: c for e, c in out.items() if c})

    def shift_var(self, i: int, a: "LaurentPolynomial | Scalar") -> "LaurentPolynomial":
        """Substitute t_i -> t_i + a, where ``a`` does not involve t_i.

        Only defined when t_i occurs with non-negative exponents.
        """
        if not isinstance(a, LaurentPolynomial):
            a = LaurentPolynomial.constant(self.nvars, a)
        if i in a.variables():
            raise ValueError("shift amount must not involve the shifted variable")
        if self.terms and self.min_exp(i) < 0:
            raise DomainError("shift of a variable that occurs with negative exponents")
        if a.is_zero():
            return self
        result = LaurentPolynomial.zero(self.nvars)
        powers = [LaurentPolynomial.constant(self.nvars, 1)]
        for k, coeff in sorted(self.coefficients_in(i).items()):
            while len(powers) <= k:
                powers.append(powers[-1] * a)
            acc: Dict[Exponent, Fraction] = {}
            for l in range(k + 1):
                # coeff * C(k, l) * a^(k-l) * t_i^l
                part = coeff * powers[k - l] * comb(k, l)
                for e, c in part.terms.items():
                    ne = e[:i] + (l,) + e[i + 1:]
                    acc[ne] = acc.get(ne, 0) + c
            result = result + LaurentPolynomial(self.nvars, acc)
        return result

    # ------------------------------------------------------------------ normal forms
    def leading_term(self) -> tuple[Exponent, Fraction]:
        """Lexicographically largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def monomial_content(self) -> Exponent:
        """Componentwise minimal exponent (the largest monomial dividing the polynomial)."""
        return self.min_exps()

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        from math import gcd
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(0)

    def normalize_factor(self) -> tuple[Fraction, Exponent, "LaurentPolynomial"]:
        """Write self = c * t^m * q with q a polynomial free of monomial factors
        whose lexicographically leading coefficient is 1. Returns (c, m, q)."""
        if not self.terms:
            raise ValueError("cannot normalize the zero polynomial")
        m = self.min_exps()
        neg = tuple(-k for k in m)
        q = self.mul_monomial(neg)
        _, lc = q.leading_term()
        q = q * (1 / lc)
        return lc, m, q

    # ------------------------------------------------------------------ division
    def div_exact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient in the Laurent ring; raises NotDivisibleError otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("exact division by zero polynomial")
        if self.is_zero():
            return self
        c, m, q = other.normalize_factor()
        p = self.mul_monomial(tuple(-k for k in m), 1 / c)
        if q.is_constant():
            return p
        return _divexact_poly(p, q)

    def divides(self, other: "LaurentPolynomial") -> bool:
        try:
            other.div_exact(self)
        except NotDivisibleError:
            return False
        return True

    def multiplicity(self, factor: "LaurentPolynomial") -> int:
        """Largest k with factor^k dividing self (self must be nonzero)."""
        if self.is_zero():
            raise ValueError("multiplicity in the zero polynomial is unbounded")
        _, _, q = factor.normalize_factor()
        if q.is_constant():
            raise ValueError("multiplicity of a unit is unbounded")
        k = 0
        p = self
        while True:
            try:
                p = p.div_exact(q)
            except NotDivisibleError:
                return k
            k += 1

    def quo_rem_univariate(self, other: "LaurentPolynomial") -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Euclidean division for polynomials in a single variable (nvars == 1)."""
        if self.nvars != 1 or other.nvars != 1:
            raise ValueError("quo_rem_univariate needs one-variable polynomials")
        if not self.is_polynomial() or not other.is_polynomial():
            raise DomainError("quo_rem_univariate needs non-negative exponents")
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        a = _dense(self)
        b = _dense(other)
        q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
        lb = b[-1]
        while len(a) >= len(b) and any(a):
            shift = len(a) - len(b)
            f = a[-1] / lb
            q[shift] = f
            for k, bk in enumerate(b):
                a[k + shift] -= f * bk
            a.pop()
            while a and not a[-1]:
                a.pop()
        return (LaurentPolynomial.from_univariate(q),
                LaurentPolynomial.from_univariate(a))


def _dense(p: LaurentPolynomial) -> list[Fraction]:
    if not p.terms:
        return []
    deg = p.max_exp(0)
    out = [Fraction(0)] * (deg + 1)
    for (k,), c in p.terms.items():
        out[k] = c
    return out


def _divexact_poly(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Exact division p / q where q is a normalized polynomial (no monomial factor).

    Works one variable at a time: q is viewed as a univariate polynomial in a
    main variable v with coefficients in the Laurent ring of the others, and
    coefficient quotients are taken recursively. Negative powers of v in p are
    cleared first; this does not change exactness since q has no v-power factor.
    """
    if q.is_constant():
        return p * (1 / q.constant_term())
    if p.is_zero():
        return p
    # main variable: the one of highest degree in q (ties -> lowest index)
    used = sorted(q.variables())
    v = max(used, key=lambda i: (q.max_exp(i), -i))
    qc = q.coefficients_in(v)
    dq = max(qc)
    if min(qc) != 0:
        raise AssertionError("divisor still carries a monomial factor")
    lcq = qc[dq]
    lo = p.min_exp(v)
    if lo < 0:
        shift = [0] * p.nvars
        shift[v] = -lo
        p = p.mul_monomial(shift)
    rem = {k: c for k, c in p.coefficients_in(v).items()}
    quot: Dict[Exponent, Fraction] = {}
    while rem:
        dr = max(rem)
        if dr < dq:
            raise NotDivisibleError("nonzero remainder in exact division")
        lead = rem[dr]
        c = lead.div_exact(lcq) if not lcq.is_constant() else lead * (1 / lcq.constant_term())
        k = dr - dq
        for e, val in c.terms.items():
            ne = e[:v] + (k,) + e[v + 1:]
            quot[ne] = quot.get(ne, 0) + val
        for j, qj in qc.items():
            sub = c * qj
            key = j + k
            cur = rem.get(key)
            nxt = -sub if cur is None else cur - sub
            if nxt.is_zero():
                rem.pop(key, None)
            else:
                rem[key] = nxt
        # leading coefficient must have been killed
        if dr in rem:
            raise NotDivisibleError("nonzero remainder in exact division")
    out = LaurentPolynomial(p.nvars, quot)
    if lo < 0:
        out = out.mul_monomial(tuple(lo if i == v else 0 for i in range(p.nvars)))
    return out


def poly_gcd_univariate(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Monic gcd of two one-variable polynomials (non-negative exponents)."""
    while not b.is_zero():
        _, r = a.quo_rem_univariate(b)
        a, b = b, r
    if a.is_zero():
        return a
    lc = a.terms[max(a.terms)]
    return a * (1 / lc)


def lin(nvars: int, coeffs: Mapping[int, Scalar], const: Scalar = 0) -> LaurentPolynomial:
    """Linear form const + sum coeffs[i] * t_i; handy for factors like t1 - t2."""
    p = LaurentPolynomial.constant(nvars, const)
    for i, c in coeffs.items():
        p = p + LaurentPolynomial.variable(nvars, i) * Fraction(c)
    return p


def sum_polys(nvars: int, polys: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    acc: Dict[Exponent, Fraction] = {}
    for p in polys:
        for e, c in p.terms.items():
            acc[e] = acc.get(e, 0) + c
    return LaurentPolynomial._raw(nvars, {e: c for e, c in acc.items() if c})
