"""Exact Gaussian average of det(1 - sqrt(s) X)^N over N x N Hermitian X.

The measure is the normalized Gaussian with E[X_ij X_kl] = delta_il delta_jk / N,
so N = 1 gives E[(1 - a x)] = 1. The determinant power is expanded as a
polynomial in the entries and in a = sqrt(s); monomials are averaged with
Wick's theorem. Odd powers of a must cancel, leaving a polynomial in s.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, Tuple

from .algebra import LaurentPolynomial
from .oracles import double_factorial
from .ribbon import ResourceLimitError, perfect_matchings

MAX_N = 3

# a monomial is (power of a, sorted tuple of ((i, j), multiplicity))
Monomial = Tuple[int, Tuple[Tuple[Tuple[int, int], int], ...]]
Poly = Dict[Monomial, int]


def _key(a: int, entries: Counter) -> Monomial:
    return a, tuple(sorted((e, m) for e, m in entries.items() if m))


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = defaultdict(int)
    for (a1, e1), c1 in p.items():
        for (a2, e2), c2 in q.items():
            ent = Counter(dict(e1))
            ent.update(dict(e2))
            out[_key(a1 + a2, ent)] += c1 * c2
    return {k: v for k, v in out.items() if v}


def _sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def det_one_minus(N: int) -> Poly:
    """det(1 - a X) as a polynomial in a and the entries X_ij."""
    out: Poly = defaultdict(int)
    for perm in permutations(range(N)):
        term: Poly = {_key(0, Counter()): _sign(perm)}
        for i, j in enumerate(perm):
            factor: Poly = {_key(1, Counter({(i, j): 1})): -1}
            if i == j:
                factor[_key(0, Counter())] = 1
            term = _mul(term, factor)
        for k, v in term.items():
            out[k] += v
    return {k: v for k, v in out.items() if v}


def monomial_expectation(entries, N: int) -> Fraction:
    """E[prod X_ij^m_ij] under E[X_ij X_kl] = delta_il delta_jk / N.

    X_ij only pairs with X_ji, so off-diagonal exponents must match and
    contribute m! pairings; diagonal ones contribute (m - 1)!! for even m.
    """
    m = dict(entries)
    value = Fraction(1)
    for (i, j), k in m.items():
        if i == j:
            if k % 2:
                return Fraction(0)
            value *= Fraction(double_factorial(k - 1), N ** (k // 2))
        elif i < j:
            if m.get((j, i), 0) != k:
                return Fraction(0)
            value *= Fraction(factorial(k), N ** k)
        elif (j, i) not in m:
            return Fraction(0)
    return value


def pairing_expectation(entries, N: int) -> Fraction:
    """The same expectation by summing over every perfect matching of the factors."""
    factors = [e for e, k in entries for _ in range(k)]
    total = Fraction(0)
    for partner in perfect_matchings(len(factors)):
        w = Fraction(1)
        for a, b in enumerate(partner):
            if a < b:
                (i, j), (k, l) = factors[a], factors[b]
                if i != l or j != k:
                    w = Fraction(0)
                    break
                w /= N
        total += w
    if not factors:
        return Fraction(1)
    return total


def _average(N: int, expectation) -> Dict[int, Fraction]:
    if N < 1:
        raise ValueError("N must be a positive integer")
    if N > MAX_N:
        raise ResourceLimitError(f"Wick expansion is limited to N <= {MAX_N}")
    det = det_one_minus(N)
    power: Poly = {_key(0, Counter()): 1}
    for _ in range(N):
        power = _mul(power, det)
    by_a: Dict[int, Fraction] = defaultdict(Fraction)
    for (a, entries), c in power.items():
        v = expectation(entries, N)
        if v:
            by_a[a] += c * v
    return {a: v for a, v in sorted(by_a.items()) if v}


def wick_average_sqrt(N: int, *, by_pairings: bool = False) -> Dict[int, Fraction]:
    """Coefficients of the average as a polynomial in a = sqrt(s)."""
    return _average(N, pairing_expectation if by_pairings else monomial_expectation)


def wick_matrix_average(N: int, *, by_pairings: bool = False) -> LaurentPolynomial:
    """The average as a polynomial in s; raises if an odd power of sqrt(s) survives."""
    coeffs = wick_average_sqrt(N, by_pairings=by_pairings)
    odd = {a: c for a, c in coeffs.items() if a % 2}
    if odd:
        raise ArithmeticError(f"odd powers of sqrt(s) survive: {odd}")
    return LaurentPolynomial.from_univariate({a // 2: c for a, c in coeffs.items()})
