"""Verification suites shared by the command line and the acceptance tests.

Each suite returns a SuiteReport: a list of named checks with a pass flag
and a short detail string. ``level`` bounds 2g - 2 + n for every cell the
suite touches.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from .algebra import LaurentPolynomial
from .catalan import catalan, catalan_closed, catalan_gn, parenthesizations
from .eo import eo_rhs, w_gn
from .laplace import (
    compute_F,
    dvv_oracle,
    intersection_numbers,
    laplace_series_mismatches,
    stable_cells,
    structural_report,
)
from .quantum import engine_provider, perturbed_provider, schrodinger_residual
from .ribbon import DEFAULT_BUDGET, ribbon_oracle
from .spectral import verify_prime_form_identity
from .wick import MAX_N, wick_average_sqrt

log = logging.getLogger(__name__)

SUITES = ("catalan", "laplace", "eo", "schrodinger")
SERIES_CELLS = ((1, 1), (0, 3), (0, 4), (1, 2))
SERIES_ORDER = 8


@dataclass
class Check:
    id: str
    passed: bool
    detail: str = ""
    cell: tuple[int, int] | None = None


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, id: str, passed: bool, detail: str = "", cell=None) -> None:
        self.checks.append(Check(id, bool(passed), detail, cell))


def _map(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------- catalan

def catalan_suite(budget: int = DEFAULT_BUDGET, max_sum: int = 10, max_n: int = 4) -> SuiteReport:
    rep = SuiteReport("catalan")
    ok = all(catalan(m) == catalan_closed(m) for m in range(13))
    rep.add("catalan.recursion_vs_closed_form", ok, "m <= 12")
    rep.add("catalan.first_values", [catalan(m) for m in range(4)] == [1, 1, 2, 5], "1, 1, 2, 5")
    small = min(6, budget // 2)
    ok = all(len(parenthesizations(m)) == catalan(m) == ribbon_oracle([2 * m], budget).get(0, 0)
             for m in range(1, small + 1))
    rep.add("catalan.parenthesizations_and_ribbon", ok, f"1 <= m <= {small}")
    limit = min(max_sum, budget)
    bad = []
    count = 0
    for n in range(1, max_n + 1):
        for mu in product(range(limit + 1), repeat=n):
            if sum(mu) > limit:
                continue
            oracle = ribbon_oracle(mu, budget)
            for g in range(0, sum(mu) // 4 + 2):
                count += 1
                if catalan_gn(g, mu) != oracle.get(g, 0):
                    bad.append((g, mu))
    rep.add("catalan.ribbon_oracle_equivalence", not bad,
            f"{count} (g, mu) pairs with sum(mu) <= {limit}, n <= {max_n}" + (f"; mismatches {bad[:5]}" if bad else ""))
    ex = catalan_gn(1, [6]) == 10 and ribbon_oracle([4], budget) == {0: 2, 1: 1} and ribbon_oracle([2, 2], budget) == {0: 2}
    rep.add("catalan.examples", ex, "C_{1,1}(6) = 10, ribbon [4] and [2,2]")
    return rep


# ---------------------------------------------------------------- laplace

def _structure_cell(cell) -> tuple:
    g, n = cell
    return cell, structural_report(g, n)


def _intersection_cell(cell) -> tuple:
    g, n = cell
    ints = intersection_numbers(g, n)
    bad = [(d, v) for d, v in ints.items() if v != dvv_oracle(g, d)]
    return cell, len(ints), bad


def laplace_suite(level: int = 3, jobs: int = 1, series_order: int = SERIES_ORDER) -> SuiteReport:
    rep = SuiteReport("laplace")
    t = LaurentPolynomial.variable(1, 0)
    f11 = (t ** 3 - t * 9 - t ** -1 * 9 + t ** -3) * Fraction(-1, 384) + Fraction(1, 24)
    rep.add("laplace.F11_exact", compute_F(1, 1).poly == f11)
    rep.add("laplace.F11_at_one", compute_F(1, 1).poly.evaluate(1) == Fraction(1, 12))
    rep.add("laplace.F03_at_ones", compute_F(0, 3).poly.evaluate([1, 1, 1]) == -1)
    rep.add("spectral.prime_form_identity", verify_prime_form_identity())
    cells = stable_cells(level)
    for cell, report in _map(_structure_cell, cells, jobs):
        for name, ok in report.items():
            rep.add(f"laplace.{name}.g{cell[0]}n{cell[1]}", ok, cell=cell)
    results = _map(_intersection_cell, cells, jobs)
    for (g, n), count, bad in results:
        rep.add(f"laplace.intersections.g{g}n{n}", not bad,
                f"{count} indices" + (f"; mismatches {bad[:3]}" if bad else ""), cell=(g, n))
    for g, n in SERIES_CELLS:
        if 2 * g - 2 + n > level:
            continue
        bad = laplace_series_mismatches(g, n, series_order)
        rep.add(f"laplace.series.g{g}n{n}", not bad,
                f"order {series_order}" + (f"; mismatches {bad[:3]}" if bad else ""), cell=(g, n))
    return rep


# ---------------------------------------------------------------- eo

def _eo_cell(cell) -> tuple:
    g, n = cell
    try:
        rhs = eo_rhs(g, n)
    except (ArithmeticError, AssertionError) as exc:
        return cell, False, str(exc)
    ok = rhs.coefficient == w_gn(g, n).coefficient
    return cell, ok, "residues at +-t_j agree with residues at 0 and infinity"


def eo_suite(level: int = 3, jobs: int = 1) -> SuiteReport:
    rep = SuiteReport("eo")
    for (g, n), ok, detail in _map(_eo_cell, stable_cells(level), jobs):
        rep.add(f"eo.recursion.g{g}n{n}", ok, detail, cell=(g, n))
    return rep


# ---------------------------------------------------------------- schrodinger

def schrodinger_suite(level: int = 3) -> SuiteReport:
    rep = SuiteReport("schrodinger")
    F = engine_provider()
    for chart in ("t", "z"):
        cache: dict = {}
        for K in range(level + 1):
            r = schrodinger_residual(K, F, chart, cache)
            rep.add(f"schrodinger.order{K}.{chart}", r.vanishes(), "" if r.vanishes() else str(r.residual))
    if level >= 2:
        delta = LaurentPolynomial.variable(1, 0) * Fraction(1, 1000)
        bad = perturbed_provider(F, 1, 1, delta)
        r = schrodinger_residual(2, bad)
        rep.add("schrodinger.mutation_detected", not r.vanishes(), "F_{1,1} + t/1000 at order 2")
    for N in range(1, MAX_N + 1):
        a = wick_average_sqrt(N)
        b = wick_average_sqrt(N, by_pairings=True)
        odd = [k for k in a if k % 2]
        ok = a == b and not odd and (N > 1 or a == {0: Fraction(1)})
        rep.add(f"matrix.wick.N{N}", ok, "polynomial in s; pairing enumeration agrees")
    return rep


def run_suite(name: str, level: int = 3, jobs: int = 1, budget: int = DEFAULT_BUDGET) -> list[SuiteReport]:
    if name == "all":
        names = SUITES
    elif name in SUITES:
        names = (name,)
    else:
        raise ValueError(f"unknown suite {name!r}")
    out = []
    for s in names:
        if s == "catalan":
            out.append(catalan_suite(budget))
        elif s == "laplace":
            out.append(laplace_suite(level, jobs))
        elif s == "eo":
            out.append(eo_suite(level, jobs))
        else:
            out.append(schrodinger_suite(level))
    return out
