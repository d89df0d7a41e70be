"""Brute-force count of arrowed cellular graphs by perfect matchings.

Label the half-edges at vertex i as (i, 0), ..., (i, mu_i - 1) in
counter-clockwise order. A graph is a fixed-point-free involution on the
half-edges. The rotation group prod Z/mu_i acts on labelings and the
stabilizer of a graph is its automorphism group, so the number of labeled
matchings of genus g equals prod(mu) * D_{g,n}(mu) = C_{g,n}(mu).
"""
from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

DEFAULT_BUDGET = 14
HARD_CEILING = 16


class ResourceLimitError(RuntimeError):
    """The requested enumeration exceeds the half-edge budget."""


def perfect_matchings(n: int) -> Iterator[list[int]]:
    """All fixed-point-free involutions of range(n) as partner arrays."""
    if n % 2:
        return
    partner = [-1] * n

    def rec() -> Iterator[list[int]]:
        try:
            first = partner.index(-1)
        except ValueError:
            yield list(partner)
            return
        for other in range(first + 1, n):
            if partner[other] == -1:
                partner[first] = other
                partner[other] = first
                yield from rec()
                partner[first] = partner[other] = -1

    yield from rec()


def _layout(mu: Sequence[int]) -> tuple[list[int], list[int]]:
    """Vertex of each half-edge, and the counter-clockwise successor permutation."""
    vertex, succ = [], []
    start = 0
    for i, m in enumerate(mu):
        for k in range(m):
            vertex.append(i)
            succ.append(start + (k + 1) % m)
        start += m
    return vertex, succ


def count_faces(partner: Sequence[int], succ: Sequence[int]) -> int:
    """Boundary cycles of the permutation h -> succ(partner(h))."""
    seen = [False] * len(partner)
    faces = 0
    for h in range(len(partner)):
        if not seen[h]:
            faces += 1
            x = h
            while not seen[x]:
                seen[x] = True
                x = succ[partner[x]]
    return faces


def is_connected(partner: Sequence[int], vertex: Sequence[int], n: int) -> bool:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for h, p in enumerate(partner):
        a, b = find(vertex[h]), find(vertex[p])
        if a != b:
            parent[a] = b
    root = find(0)
    return all(find(i) == root for i in range(n))


def matching_genus(partner: Sequence[int], mu: Sequence[int]) -> int:
    """Genus from Euler's formula n - E + F = 2 - 2g (matching must be connected)."""
    _, succ = _layout(mu)
    n = len(mu)
    edges = len(partner) // 2
    faces = count_faces(partner, succ) if partner else 1
    chi = n - edges + faces
    if chi % 2:
        raise AssertionError("odd Euler characteristic from face tracing")
    return (2 - chi) // 2


def ribbon_oracle(mu: Sequence[int], budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Map genus -> number of connected labeled matchings with degrees mu."""
    mu = tuple(mu)
    if budget > HARD_CEILING:
        raise ResourceLimitError(f"budget {budget} exceeds the hard ceiling {HARD_CEILING}")
    total = sum(mu)
    if total % 2:
        return {}
    if total > budget:
        raise ResourceLimitError(f"{total} half-edges exceed the budget of {budget}")
    n = len(mu)
    if total == 0:
        # a lone degree-0 vertex is a connected cell decomposition of the sphere
        return {0: 1} if n == 1 else {}
    vertex, succ = _layout(mu)
    counts: Counter[int] = Counter()
    for partner in perfect_matchings(total):
        if not is_connected(partner, vertex, n):
            continue
        faces = count_faces(partner, succ)
        chi = n - total // 2 + faces
        counts[(2 - chi) // 2] += 1
    return dict(sorted(counts.items()))
