"""Truncated Laurent series in x with exact rational coefficients.

A series holds coefficients for the exponent window [base, base+T].  Window
bookkeeping is explicit: adding series restricts to the window overlap, and
every operator identity downstream is asserted on the window both sides
actually share.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .errors import ArgumentError


class LaurentSeries:
    """Exact coefficients a_j of x**(base+j), j = 0..T."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base: int, coeffs: Sequence[Fraction]):
        if not coeffs:
            raise ArgumentError("a truncated Laurent series needs at least one coefficient")
        self.base = int(base)
        self.coeffs = [Fraction(c) for c in coeffs]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def top(self) -> int:
        return self.base + self.order

    def coefficient(self, exponent: int) -> Fraction:
        if exponent < self.base or exponent > self.top:
            raise ArgumentError(
                f"exponent {exponent} outside trusted window [{self.base}, {self.top}]"
            )
        return self.coeffs[exponent - self.base]

    def shift(self, power: int) -> "LaurentSeries":
        """Multiply by x**power (window shifts with it)."""
        return LaurentSeries(self.base + power, self.coeffs)

    def scale(self, factor) -> "LaurentSeries":
        factor = Fraction(factor)
        return LaurentSeries(self.base, [factor * c for c in self.coeffs])

    def map_exponents(self, fn: Callable[[int], Fraction]) -> "LaurentSeries":
        """Diagonal operator: coefficient of x**m is multiplied by fn(m)."""
        return LaurentSeries(
            self.base, [fn(self.base + j) * c for j, c in enumerate(self.coeffs)]
        )

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        lo = max(self.base, other.base)
        hi = min(self.top, other.top)
        if hi < lo:
            raise ArgumentError("series windows do not overlap")
        return LaurentSeries(
            lo, [self.coefficient(m) + other.coefficient(m) for m in range(lo, hi + 1)]
        )

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + other.scale(-1)

    def __neg__(self) -> "LaurentSeries":
        return self.scale(-1)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def common_window(self, other: "LaurentSeries") -> tuple[int, int]:
        return max(self.base, other.base), min(self.top, other.top)

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Exact coefficient equality on the shared window."""
        lo, hi = self.common_window(other)
        if hi < lo:
            raise ArgumentError("series windows do not overlap")
        return all(self.coefficient(m) == other.coefficient(m) for m in range(lo, hi + 1))

    def eval_at(self, x):
        """Numeric evaluation; x may be float, complex or Fraction."""
        total = 0 * x
        for j, c in enumerate(self.coeffs):
            if isinstance(x, Fraction):
                total += c * x ** (self.base + j)
            else:
                total += (c.numerator / c.denominator) * x ** (self.base + j)
        return total

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:4])
        return f"LaurentSeries(x^{self.base} * [{head}...], T={self.order})"
