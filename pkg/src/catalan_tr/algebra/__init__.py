"""Exact algebra substrate: Laurent polynomials, rational expressions,
residues and truncated power series, all over the rationals."""
from .laurent import (
    AlgebraError,
    DomainError,
    LaurentPolynomial,
    LogTermError,
    NotDivisibleError,
    lin,
)
from .ratexpr import INFINITY, RationalExpression, finite_poles, residue, residue_sum
from .series import PowerSeries, series_compose, series_reverse
from .wire import poly_from_records, poly_to_records, rational_from_str, rational_to_str

__all__ = [
    "AlgebraError",
    "DomainError",
    "INFINITY",
    "LaurentPolynomial",
    "LogTermError",
    "NotDivisibleError",
    "PowerSeries",
    "RationalExpression",
    "finite_poles",
    "lin",
    "poly_from_records",
    "poly_to_records",
    "rational_from_str",
    "rational_to_str",
    "residue",
    "residue_sum",
    "series_compose",
    "series_reverse",
]
