"""Truncated univariate power series with Fraction coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import DomainError, Scalar


class PowerSeries:
    """sum_{k=0}^{order} c_k v^k + O(v^{order+1}).

    Results of binary operations are truncated at the smaller input order,
    so no coefficient is ever reported beyond what the inputs determine.
    """

    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs: Iterable[Scalar], order: int, var: str = "v"):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        c = [Fraction(x) for x in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order
        self.var = var

    @classmethod
    def variable(cls, order: int, var: str = "v") -> "PowerSeries":
        return cls([0, 1], order, var)

    @classmethod
    def constant(cls, c: Scalar, order: int, var: str = "v") -> "PowerSeries":
        return cls([c], order, var)

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"coefficient {k} lies beyond truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else Fraction(0)

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order}, var={self.var!r})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else self.var if k == 1 else f"{self.var}^{k}"
                parts.append(f"{c}*{mono}" if mono and c != 1 else (mono or str(c)))
        parts.append(f"O({self.var}^{self.order + 1})")
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order, self.var)
        return NotImplemented

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return PowerSeries(self.coeffs, order, self.var)

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __eq__(self, other) -> bool:
        """Equality modulo the coarser of the two truncations."""
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs], self.order, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.var)

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
            return PowerSeries([c * other for c in self.coeffs], self.order, self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        a, b = self.coeffs, other.coeffs
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return PowerSeries(out, n, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "PowerSeries":
        a = self.coeffs
        if not a[0]:
            raise DomainError("series with zero constant term is not invertible")
        n = self.order
        b = [Fraction(0)] * (n + 1)
        b[0] = 1 / a[0]
        for m in range(1, n + 1):
            s = sum((a[k] * b[m - k] for k in range(1, m + 1)), Fraction(0))
            b[m] = -s * b[0]
        return PowerSeries(b, n, self.var)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = PowerSeries.constant(1, self.order, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift_down(self, k: int = 1) -> "PowerSeries":
        """Divide by v^k; the first k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise DomainError(f"series is not divisible by {self.var}^{k}")
        return PowerSeries(self.coeffs[k:], self.order - k, self.var)

    def shift_up(self, k: int = 1) -> "PowerSeries":
        """Multiply by v^k."""
        return PowerSeries([0] * k + self.coeffs, self.order + k, self.var)

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            raise ValueError("derivative of an order-0 truncation carries no information")
        return PowerSeries([k * c for k, c in enumerate(self.coeffs)][1:], self.order - 1, self.var)

    def compose(self, g: "PowerSeries") -> "PowerSeries":
        """self(g(v)); g must have zero constant term (or self be a polynomial)."""
        n = min(self.order, g.order)
        if g.coeffs[0]:
            raise DomainError("inner series must have zero constant term")
        # Horner from the top coefficient
        result = PowerSeries.constant(0, n, g.var)
        gt = g.truncate(n)
        for c in reversed(self.coeffs[: n + 1]):
            result = result * gt + c
        return result

    def reverse(self) -> "PowerSeries":
        """Compositional inverse via Lagrange inversion:
        [v^k] g = (1/k) [v^(k-1)] (v / f(v))^k."""
        a = self.coeffs
        if a[0]:
            raise DomainError("reversion needs a zero constant term")
        if self.order < 1 or not a[1]:
            raise DomainError("reversion needs an invertible linear term")
        n = self.order
        quot = PowerSeries(a[1:], n - 1, self.var).inverse()   # v / f(v)
        out = [Fraction(0)] * (n + 1)
        power = PowerSeries.constant(1, n - 1, self.var)
        for k in range(1, n + 1):
            power = power * quot
            out[k] = power[k - 1] / k
        return PowerSeries(out, n, self.var)


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f.compose(g)


def series_reverse(s: PowerSeries) -> PowerSeries:
    return s.reverse()


def from_list(coeffs: Sequence[Scalar], var: str = "v") -> PowerSeries:
    return PowerSeries(coeffs, len(coeffs) - 1, var)
