"""Truncated Laurent series in the weight-counting variable beta.

Coefficients are exact rationals.  Each series carries the largest exponent
up to which its coefficients are trusted; arithmetic propagates that window
honestly (multiplying by a series whose expansion starts at beta^m shifts
the trusted window by m).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArgumentError, CapacityError


class BetaSeries:
    """Laurent polynomial in beta, trusted for exponents <= order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: dict[int, Fraction], order: int):
        self.coeffs = {e: Fraction(c) for e, c in coeffs.items() if c != 0 and e <= order}
        self.order = order

    @classmethod
    def constant(cls, value, order: int) -> "BetaSeries":
        return cls({0: Fraction(value)}, order)

    @classmethod
    def monomial(cls, value, exponent: int, order: int) -> "BetaSeries":
        return cls({exponent: Fraction(value)}, order)

    def min_exponent(self) -> int | None:
        """Lowest exponent with nonzero coefficient, None for the zero series."""
        return min(self.coeffs) if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> Fraction:
        """Trusted coefficient of beta**exponent; CapacityError past the window."""
        if exponent > self.order:
            raise CapacityError(
                f"coefficient of beta^{exponent} requested but series truncated at {self.order}"
            )
        return self.coeffs.get(exponent, Fraction(0))

    def eval_at(self, beta: Fraction) -> Fraction:
        """Exact evaluation at a nonzero rational beta."""
        beta = Fraction(beta)
        if beta == 0 and any(e < 0 for e in self.coeffs):
            raise ArgumentError("cannot evaluate a Laurent series at beta = 0")
        return sum((c * beta**e for e, c in self.coeffs.items()), Fraction(0))

    # --- ring operations ---------------------------------------------------

    def __add__(self, other: "BetaSeries") -> "BetaSeries":
        order = min(self.order, other.order)
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, Fraction(0)) + c
        return BetaSeries(coeffs, order)

    def __neg__(self) -> "BetaSeries":
        return BetaSeries({e: -c for e, c in self.coeffs.items()}, self.order)

    def __sub__(self, other: "BetaSeries") -> "BetaSeries":
        return self + (-other)

    def __mul__(self, other) -> "BetaSeries":
        if not isinstance(other, BetaSeries):
            scalar = Fraction(other)
            return BetaSeries({e: c * scalar for e, c in self.coeffs.items()}, self.order)
        if self.is_zero() or other.is_zero():
            return BetaSeries({}, min(self.order, other.order))
        order = min(self.order + other.min_exponent(), other.order + self.min_exponent())
        coeffs: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e <= order:
                    coeffs[e] = coeffs.get(e, Fraction(0)) + c1 * c2
        return BetaSeries(coeffs, order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BetaSeries":
        if isinstance(other, BetaSeries):
            return self * other.reciprocal()
        return self * (1 / Fraction(other))

    def __pow__(self, n: int) -> "BetaSeries":
        if n < 0:
            return self.reciprocal() ** (-n)
        result = BetaSeries.constant(1, self.order)
        for _ in range(n):
            result = result * self
        return result

    def reciprocal(self) -> "BetaSeries":
        """Inverse as a Laurent series; needs a nonzero lowest coefficient."""
        e0 = self.min_exponent()
        if e0 is None:
            raise ArgumentError("cannot invert the zero series")
        a0 = self.coeffs[e0]
        rel_order = self.order - e0
        a = [self.coeffs.get(e0 + j, Fraction(0)) for j in range(rel_order + 1)]
        b = [Fraction(0)] * (rel_order + 1)
        b[0] = 1 / a0
        for j in range(1, rel_order + 1):
            b[j] = -sum(a[i] * b[j - i] for i in range(1, j + 1)) / a0
        return BetaSeries({-e0 + j: b[j] for j in range(rel_order + 1)}, self.order - 2 * e0)

    # --- comparison ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        """Coefficientwise equality on the common trusted window."""
        if not isinstance(other, BetaSeries):
            return NotImplemented
        order = min(self.order, other.order)
        exps = {e for e in self.coeffs if e <= order} | {e for e in other.coeffs if e <= order}
        return all(
            self.coeffs.get(e, Fraction(0)) == other.coeffs.get(e, Fraction(0)) for e in exps
        )

    __hash__ = None  # truncation-window equality is not hash-compatible

    def __repr__(self) -> str:
        if self.is_zero():
            return f"BetaSeries(0; order={self.order})"
        terms = " + ".join(f"({c})*b^{e}" for e, c in sorted(self.coeffs.items()))
        return f"BetaSeries({terms}; order={self.order})"


def geometric_series(ratio: Fraction, order: int) -> BetaSeries:
    """1/(1 - ratio*beta) expanded to the given order."""
    ratio = Fraction(ratio)
    coeffs = {}
    power = Fraction(1)
    for j in range(order + 1):
        coeffs[j] = power
        power *= ratio
    return BetaSeries(coeffs, order)
