"""Catalan numbers and their genus expansion C_{g,n}(mu).

C_{g,n}(mu) counts connected cellular graphs of genus g on n labeled
vertices of degrees mu_1..mu_n, with an arrow on one half-edge at every
vertex. The recursion below removes the arrowed half-edge at the first
vertex: either it is an edge to another vertex (contract it) or a loop
(pinch it, which lowers the genus or splits the surface).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, prod
from typing import Iterator, Sequence

from .algebra import DomainError, PowerSeries


@dataclass(frozen=True)
class CountKey:
    g: int
    mu: tuple[int, ...]

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be non-negative")
        if not self.mu:
            raise ValueError("at least one vertex is required")
        if any(m < 0 for m in self.mu):
            raise ValueError("vertex degrees must be non-negative")
        object.__setattr__(self, "mu", tuple(self.mu))

    @property
    def n(self) -> int:
        return len(self.mu)

    def canonical(self) -> "CountKey":
        return CountKey(self.g, tuple(sorted(self.mu, reverse=True)))


# ---------------------------------------------------------------- classical numbers

@lru_cache(maxsize=None)
def catalan(m: int) -> int:
    """C_m through the quadratic recursion C_m = sum_{a+b=m-1} C_a C_b."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return 1
    return sum(catalan(a) * catalan(m - 1 - a) for a in range(m))


def catalan_closed(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def parenthesizations(m: int) -> list[str]:
    """All legal arrangements of m pairs of parentheses."""
    if m < 1:
        raise ValueError("m must be at least 1")
    out: list[str] = []

    def grow(prefix: str, opened: int, closed: int) -> None:
        if closed == m:
            out.append(prefix)
            return
        if opened < m:
            grow(prefix + "(", opened + 1, closed)
        if closed < opened:
            grow(prefix + ")", opened, closed + 1)

    grow("", 0, 0)
    return out


def z_series(order: int) -> PowerSeries:
    """z(x) = sum_m C_m x^{-2m-1}, as a power series in v = 1/x truncated at v^order."""
    if order < 1:
        raise ValueError("order must be positive")
    coeffs = [0] * (order + 1)
    for m in range((order - 1) // 2 + 1):
        coeffs[2 * m + 1] = catalan(m)
    return PowerSeries(coeffs, order, "v")


# ---------------------------------------------------------------- generalized numbers

def _set_splits(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Ordered splits I ⊔ J of a tuple of degrees (by position)."""
    n = len(items)
    idx = range(n)
    for r in range(n + 1):
        for chosen in combinations(idx, r):
            cs = set(chosen)
            yield (tuple(items[i] for i in chosen),
                   tuple(items[i] for i in idx if i not in cs))


def _base(g: int, mu: tuple[int, ...]) -> int | None:
    if g < 0:
        return 0
    if sum(mu) % 2:
        return 0
    if 0 in mu:
        return 1 if (g == 0 and mu == (0,)) else 0
    return None


def _recursion(g: int, mu: tuple[int, ...], C) -> int:
    m1, rest = mu[0], mu[1:]
    total = 0
    # arrowed half-edge is an edge to vertex j: contract it
    for j, mj in enumerate(rest):
        others = rest[:j] + rest[j + 1:]
        total += mj * C(g, (m1 + mj - 2,) + others)
    # arrowed half-edge is a loop: alpha half-edges on one side, beta on the other
    for alpha in range(m1 - 1):
        beta = m1 - 2 - alpha
        total += C(g - 1, (alpha, beta) + rest)
        for g1 in range(g + 1):
            for I, J in _set_splits(rest):
                a = C(g1, (alpha,) + I)
                if a:
                    total += a * C(g - g1, (beta,) + J)
    return total


def catalan_gn_uncached(g: int, mu: Sequence[int]) -> int:
    """Plain recursion on mu_1 without memoization or reordering."""
    mu = tuple(mu)
    b = _base(g, mu)
    if b is not None:
        return b
    return _recursion(g, mu, catalan_gn_uncached)


@lru_cache(maxsize=None)
def _cgn_ordered(g: int, mu: tuple[int, ...]) -> int:
    b = _base(g, mu)
    if b is not None:
        return b
    return _recursion(g, mu, _cgn_ordered)


@lru_cache(maxsize=None)
def _cgn_canonical(g: int, mu: tuple[int, ...]) -> int:
    b = _base(g, mu)
    if b is not None:
        return b
    return _recursion(g, mu, lambda h, nu: _cgn_canonical(h, tuple(sorted(nu, reverse=True))))


def catalan_gn(g: int, mu: Sequence[int], *, canonical: bool = True) -> int:
    """Generalized Catalan number C_{g,n}(mu), memoized.

    With ``canonical=True`` the memo key sorts mu descending, which is only
    valid because C_{g,n} is symmetric in mu; ``canonical=False`` recurses on
    mu exactly as given so that the symmetry itself can be tested.
    """
    key = CountKey(g, tuple(mu))
    if canonical:
        return _cgn_canonical(key.g, key.canonical().mu)
    return _cgn_ordered(key.g, key.mu)


def d_gn(g: int, mu: Sequence[int]) -> Fraction:
    """Automorphism-weighted count D_{g,n}(mu) = C_{g,n}(mu) / prod(mu)."""
    mu = tuple(mu)
    if any(m == 0 for m in mu):
        raise DomainError("D_{g,n} is undefined when a vertex has degree 0")
    return Fraction(catalan_gn(g, mu), prod(mu))


def clear_caches() -> None:
    catalan.cache_clear()
    _cgn_ordered.cache_clear()
    _cgn_canonical.cache_clear()
