"""Lossless JSON-friendly encodings: rationals as "p/q" strings and Laurent
polynomials as exponent/coefficient records sorted by exponent vector."""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .laurent import LaurentPolynomial


def rational_to_str(c: Fraction | int) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def rational_from_str(s: str) -> Fraction:
    if not isinstance(s, str):
        raise TypeError(f"rationals are serialized as strings, got {type(s).__name__}")
    return Fraction(s)


def poly_to_records(p: LaurentPolynomial) -> list[dict[str, Any]]:
    return [{"exp": list(e), "coeff": rational_to_str(c)} for e, c in p.items()]


def poly_from_records(records: list[dict[str, Any]], nvars: int) -> LaurentPolynomial:
    terms = {}
    for r in records:
        e = tuple(int(k) for k in r["exp"])
        if len(e) != nvars or e in terms:
            raise ValueError(f"bad exponent record {r!r}")
        terms[e] = rational_from_str(r["coeff"])
    return LaurentPolynomial(nvars, terms)
