"""Independent reference values taken from the literature.

Nothing here depends on the Laplace-transform engine: psi-class
intersection numbers come from the Dijkgraaf-Verlinde-Verlinde recursion
and orbifold Euler characteristics of M_{g,n} from the Harer-Zagier formula.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence


def double_factorial(k: int) -> int:
    """k!! with the convention (-1)!! = 1."""
    if k < -1:
        raise ValueError("double factorial is only used for k >= -1")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


def euler_characteristic_mgn(g: int, n: int) -> Fraction:
    """Orbifold Euler characteristic of M_{g,n} (2g - 2 + n > 0).

    chi(M_{g,1}) = zeta(1 - 2g) = -B_{2g}/(2g) for g >= 1, chi(M_{0,3}) = 1,
    and forgetting a point gives chi(M_{g,n+1}) = (2 - 2g - n) chi(M_{g,n}).
    """
    if 2 * g - 2 + n <= 0 or n < 0:
        raise ValueError("(g, n) must be stable")
    if g == 0:
        chi, k = Fraction(1), 3
    else:
        chi, k = -bernoulli(2 * g) / (2 * g), 1
        if n == 0:
            # chi(M_{g,1}) = (2 - 2g) chi(M_g)
            return chi / (2 - 2 * g)
    while k < n:
        chi *= 2 - 2 * g - k
        k += 1
    return chi


def dvv(g: int, d: Sequence[int]) -> Fraction:
    """<tau_{d_1} ... tau_{d_n}>_g by the DVV (Virasoro) recursion."""
    return _dvv(g, tuple(sorted(d, reverse=True)))


@lru_cache(maxsize=None)
def _dvv(g: int, d: tuple[int, ...]) -> Fraction:
    n = len(d)
    if g < 0 or n == 0 or any(x < 0 for x in d):
        return Fraction(0)
    if sum(d) != 3 * g - 3 + n:
        return Fraction(0)
    if 2 * g - 2 + n <= 0:
        return Fraction(0)
    if g == 0 and d == (0, 0, 0):
        return Fraction(1)
    if g == 1 and d == (1,):
        return Fraction(1, 24)
    k = d[0] - 1          # first insertion is tau_{k+1}, k >= -1
    rest = d[1:]
    total = Fraction(0)
    for j, dj in enumerate(rest):
        others = rest[:j] + rest[j + 1:]
        total += Fraction(double_factorial(2 * k + 2 * dj + 1), double_factorial(2 * dj - 1)) * \
            dvv(g, (k + dj,) + others)
    for r in range(k):
        s = k - 1 - r
        w = Fraction(double_factorial(2 * r + 1) * double_factorial(2 * s + 1), 2)
        total += w * dvv(g - 1, (r, s) + rest)
        m = len(rest)
        for g1 in range(g + 1):
            for size in range(m + 1):
                for I in combinations(range(m), size):
                    J = [i for i in range(m) if i not in I]
                    a = dvv(g1, (r,) + tuple(rest[i] for i in I))
                    if a:
                        total += w * a * dvv(g - g1, (s,) + tuple(rest[i] for i in J))
    return total / double_factorial(2 * k + 3)
