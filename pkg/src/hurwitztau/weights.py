"""Rational weight generating functions G(z) = prod(1+c_i z) / prod(1-d_j z).

WeightData carries the parameter lists plus the validity guards every
consumer relies on: G(i*beta) finite and nonzero on the guarded index
range, and no 1/(beta*d_j) resonance at an integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import ArgumentError, DomainError

RationalLike = Fraction | int | str


def parse_rational(value: RationalLike) -> Fraction:
    """Exact rational from an int, Fraction or 'p/q' string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ArgumentError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Lossless 'p/q' form used in every machine-readable output."""
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class WeightData:
    """Parameters (c, d, beta) of a rational weight generating function."""

    c: tuple[Fraction, ...]
    d: tuple[Fraction, ...]
    beta: Fraction
    guard_bound: int = 40

    def __init__(
        self,
        c: Sequence[RationalLike] = (),
        d: Sequence[RationalLike] = (),
        beta: RationalLike = 1,
        guard_bound: int = 40,
    ):
        object.__setattr__(self, "c", tuple(parse_rational(v) for v in c))
        object.__setattr__(self, "d", tuple(parse_rational(v) for v in d))
        object.__setattr__(self, "beta", parse_rational(beta))
        object.__setattr__(self, "guard_bound", int(guard_bound))
        self._validate()

    def _validate(self) -> None:
        if self.beta == 0:
            raise ArgumentError("beta must be nonzero")
        if any(v == 0 for v in self.c) or any(v == 0 for v in self.d):
            raise ArgumentError("all c and d parameters must be nonzero")
        if self.guard_bound < 1:
            raise ArgumentError("guard_bound must be positive")
        for dj in self.d:
            inv = 1 / (self.beta * dj)
            if inv.denominator == 1:
                raise DomainError(
                    f"1/(beta*d) = {inv} is an integer; the adapted basis is not unique"
                )
        for i in range(-self.guard_bound, self.guard_bound + 1):
            for cl in self.c:
                if 1 + i * self.beta * cl == 0:
                    raise DomainError(f"G({i}*beta) vanishes: 1 + {i}*beta*c = 0 for c = {cl}")
            for dj in self.d:
                if 1 - i * self.beta * dj == 0:
                    raise DomainError(f"G({i}*beta) has a pole: 1 - {i}*beta*d = 0 for d = {dj}")

    @property
    def L(self) -> int:
        return len(self.c)

    @property
    def M(self) -> int:
        return len(self.d)

    def g_at(self, z: Fraction) -> Fraction:
        """Exact value of G(z); DomainError at a pole."""
        num = Fraction(1)
        for cl in self.c:
            num *= 1 + cl * z
        den = Fraction(1)
        for dj in self.d:
            factor = 1 - dj * z
            if factor == 0:
                raise DomainError(f"pole of G at z = {z}")
            den *= factor
        return num / den

    def g_at_integer(self, i: int) -> Fraction:
        """G(i*beta), the ingredient of r_i."""
        if abs(i) > self.guard_bound:
            raise DomainError(f"index {i} outside guard bound {self.guard_bound}")
        return self.g_at(i * self.beta)

    def kappa(self) -> Fraction:
        """(-1)^M prod(beta c_l) / prod(beta d_m), the series rescaling."""
        value = Fraction(-1) ** self.M
        for cl in self.c:
            value *= self.beta * cl
        for dj in self.d:
            value /= self.beta * dj
        return value

    def describe(self) -> dict:
        return {
            "c": [format_rational(v) for v in self.c],
            "d": [format_rational(v) for v in self.d],
            "beta": format_rational(self.beta),
            "guard_bound": self.guard_bound,
        }


def elementary_symmetric(values: Sequence[Fraction], order: int) -> list[Fraction]:
    """e_0..e_order of the given values (zero beyond len(values))."""
    coeffs = [Fraction(1)] + [Fraction(0)] * order
    for v in values:
        for j in range(order, 0, -1):
            coeffs[j] += v * coeffs[j - 1]
    return coeffs


def complete_homogeneous(values: Sequence[Fraction], order: int) -> list[Fraction]:
    """h_0..h_order of the given values.

    Power series of prod 1/(1 - v t), built by repeated geometric convolution
    (the forward sweep reuses the already-updated lower coefficient).
    """
    series = [Fraction(1)] + [Fraction(0)] * order
    for v in values:
        for j in range(1, order + 1):
            series[j] = series[j] + v * series[j - 1]
    return series


def g_coeffs(weights: WeightData, order: int) -> list[Fraction]:
    """Taylor coefficients g_0..g_order of G: g_i = sum_j e_j(c) h_{i-j}(d)."""
    e = elementary_symmetric(weights.c, order)
    h = complete_homogeneous(weights.d, order)
    return [sum((e[j] * h[i - j] for j in range(i + 1)), Fraction(0)) for i in range(order + 1)]
