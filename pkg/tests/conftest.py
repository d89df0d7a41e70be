from fractions import Fraction

import sympy
from hypothesis import settings, strategies as st

from catalan_tr.algebra import LaurentPolynomial

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SYMS = sympy.symbols("t1:6")


def small_fractions():
    return st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def laurent(draw, nvars=2, max_terms=4, lo=-3, hi=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(lo, hi)) for _ in range(nvars))
        terms[e] = draw(small_fractions())
    return LaurentPolynomial(nvars, terms)


def to_sympy(p: LaurentPolynomial):
    syms = SYMS[: p.nvars]
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s ** k for s, k in zip(syms, e)])
                for e, c in p.items()), sympy.Integer(0))


def sympy_to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
