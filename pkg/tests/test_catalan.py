from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from catalan_tr.algebra import DomainError
from catalan_tr.catalan import (
    CountKey,
    catalan,
    catalan_closed,
    catalan_gn,
    catalan_gn_uncached,
    d_gn,
    parenthesizations,
    z_series,
)
from catalan_tr.ribbon import (
    HARD_CEILING,
    ResourceLimitError,
    count_faces,
    matching_genus,
    perfect_matchings,
    ribbon_oracle,
)


def test_first_catalan_numbers():
    assert [catalan(m) for m in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


@pytest.mark.parametrize("m", range(13))
def test_recursion_equals_closed_form(m):
    assert catalan(m) == catalan_closed(m)


@pytest.mark.parametrize("m", range(1, 7))
def test_parenthesizations(m):
    ps = parenthesizations(m)
    assert len(ps) == len(set(ps)) == catalan(m)
    for p in ps:
        depth = 0
        for ch in p:
            depth += 1 if ch == "(" else -1
            assert depth >= 0
        assert depth == 0


def test_parenthesizations_rejects_zero():
    with pytest.raises(ValueError):
        parenthesizations(0)


def test_generating_series():
    z = z_series(7)
    assert [z[k] for k in range(8)] == [0, 1, 0, 1, 0, 2, 0, 5]
    # z = x^{-1} + z^2 x^{-1}, i.e. z = v (1 + z^2)
    v = z.variable(7)
    assert z == v * (1 + z * z)


def test_spec_examples():
    assert catalan_gn(1, [6]) == 10
    assert catalan_gn(0, [6]) == 5
    assert catalan_gn(0, [3]) == 0
    assert catalan_gn(1, [4]) == 1
    assert d_gn(1, [4]) == Fraction(1, 4)
    assert d_gn(1, [6]) == Fraction(5, 3)


@pytest.mark.parametrize("m", range(0, 8))
def test_one_vertex_genus_zero_is_catalan(m):
    assert catalan_gn(0, [2 * m]) == catalan(m)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=3), st.integers(0, 2))
def test_symmetry_without_canonical_keys(mu, g):
    base = catalan_gn(g, mu, canonical=False)
    for p in set(permutations(mu)):
        assert catalan_gn(g, p, canonical=False) == base


@given(st.lists(st.integers(0, 4), min_size=1, max_size=3), st.integers(0, 1))
def test_memoized_equals_uncached(mu, g):
    assert catalan_gn(g, mu) == catalan_gn_uncached(g, mu)


def test_degree_zero_vertex():
    assert catalan_gn(0, [0]) == 1
    assert catalan_gn(0, [0, 2]) == 0
    with pytest.raises(DomainError):
        d_gn(0, [0, 2])


def test_count_key_validation():
    with pytest.raises(ValueError):
        CountKey(-1, (2,))
    with pytest.raises(ValueError):
        CountKey(0, ())
    with pytest.raises(ValueError):
        CountKey(0, (2, -1))
    assert CountKey(0, (1, 3, 2)).canonical().mu == (3, 2, 1)


# ---------------------------------------------------------------- brute force

@pytest.mark.parametrize("k", range(0, 6))
def test_number_of_matchings(k):
    expected = 1
    for j in range(1, 2 * k, 2):
        expected *= j
    assert sum(1 for _ in perfect_matchings(2 * k)) == expected


def test_ribbon_examples():
    assert ribbon_oracle([4]) == {0: 2, 1: 1}
    assert ribbon_oracle([2, 2]) == {0: 2}
    assert ribbon_oracle([3]) == {}
    assert ribbon_oracle([0]) == {0: 1}


def test_single_loop_torus():
    # the matching 0-2, 1-3 on one vertex is the torus
    assert matching_genus([2, 3, 0, 1], [4]) == 1
    assert count_faces([2, 3, 0, 1], [1, 2, 3, 0]) == 1


def test_budget():
    with pytest.raises(ResourceLimitError):
        ribbon_oracle([8, 8])
    with pytest.raises(ResourceLimitError):
        ribbon_oracle([2], budget=HARD_CEILING + 1)
    assert ribbon_oracle([6, 6], budget=12)[0] == catalan_gn(0, [6, 6])
    with pytest.raises(ResourceLimitError):
        ribbon_oracle([6, 8], budget=12)


def _mus(limit, n):
    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for m in range(0, limit - sum(prefix) + 1):
            yield from rec(prefix + [m])
    return list(rec([]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_equivalence_small(n):
    for mu in _mus(8, n):
        oracle = ribbon_oracle(mu)
        for g in range(0, 4):
            assert catalan_gn(g, mu) == oracle.get(g, 0), (g, mu)
