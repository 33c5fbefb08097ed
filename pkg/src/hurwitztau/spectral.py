"""The adapted basis phi_k as exact truncated Laurent series.

beta is a numeric rational here, so every operator identity (recursion,
Euler ladder, quantum spectral curve) is an exact coefficient identity on
an explicitly computed shared window.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError
from .laurent import LaurentSeries
from .weights import WeightData


@lru_cache(maxsize=None)
def rho_numeric(weights: WeightData, i: int) -> Fraction:
    """rho_i at the numeric beta carried by the weight data."""
    beta = weights.beta
    if i == 0:
        return Fraction(1)
    if i > 0:
        value = beta ** i
        for k in range(1, i + 1):
            value *= weights.g_at(k * beta)
        return value
    m = -i
    value = beta ** (-m)
    for k in range(1, m):
        g = weights.g_at(-k * beta)
        if g == 0:
            raise DomainError(f"G({-k}*beta) = 0; rho_{i} undefined")
        value /= g
    return value


def phi_series(weights: WeightData, k: int, order: int) -> LaurentSeries:
    """phi_k(x) = beta x^(1-k) sum_j rho_(j-k)/j! (x/beta)^j, truncated at j = order."""
    if weights.guard_bound < order + abs(k):
        raise DomainError(
            f"guard bound {weights.guard_bound} too small for k={k}, T={order}"
        )
    beta = weights.beta
    coeffs = [
        beta ** (1 - j) * rho_numeric(weights, j - k) / factorial(j)
        for j in range(order + 1)
    ]
    return LaurentSeries(1 - k, coeffs)


def apply_euler(series: LaurentSeries) -> LaurentSeries:
    """D = x d/dx acting diagonally: coefficient of x^m times m."""
    return series.map_exponents(lambda m: Fraction(m))


def apply_g_euler(weights: WeightData, series: LaurentSeries) -> LaurentSeries:
    """G(beta*D): coefficient of x^m times G(beta*m)."""
    return series.map_exponents(lambda m: weights.g_at(m * weights.beta))


def apply_recursion(weights: WeightData, series: LaurentSeries) -> LaurentSeries:
    """R = beta x G(beta*D); maps phi_k to phi_(k-1)."""
    return apply_g_euler(weights, series).shift(1).scale(weights.beta)


def apply_quantum_curve(weights: WeightData, series: LaurentSeries) -> LaurentSeries:
    """(x G(beta*D) - D) on the window both terms share."""
    lifted = apply_g_euler(weights, series).shift(1)
    return lifted - apply_euler(series)


def phi_aux_series(weights: WeightData, order: int) -> LaurentSeries:
    """The unique series Phi with prod_j (1 - beta d_j D) Phi = phi_1.

    The diagonal solve divides the x^m coefficient by prod_j (1 - m beta d_j),
    which the weight-data invariant guarantees never vanishes.
    """
    phi1 = phi_series(weights, 1, order)

    def inverse_factor(m: int) -> Fraction:
        denom = Fraction(1)
        for dj in weights.d:
            factor = 1 - m * weights.beta * dj
            if factor == 0:
                raise DomainError(f"resonance: 1 - {m}*beta*d = 0 for d = {dj}")
            denom *= factor
        return 1 / denom

    return phi1.map_exponents(inverse_factor)


def pochhammer(a: Fraction, n: int) -> Fraction:
    """Rising factorial (a)_n."""
    value = Fraction(1)
    for i in range(n):
        value *= a + i
    return value


def pochhammer_coefficient(weights: WeightData, k: int, j: int) -> Fraction:
    """x^(1-k+j) coefficient of phi_k from the hypergeometric closed form.

    beta rho_(-k) x^(1-k) * prod(1-k+1/(beta c))_j / prod(1-k-1/(beta d))_j
    * kappa^j / j!; must equal the rho-recursion coefficient.  (The kappa
    power multiplies only the running index j: the j -> j+1 coefficient
    ratio of the defining series is kappa * prod(1-k+1/(beta c)+j) /
    (prod(1-k-1/(beta d)+j) * (j+1)), and the j = 0 coefficient is
    beta rho_(-k).)
    """
    beta = weights.beta
    kappa = weights.kappa()
    num = Fraction(1)
    for cl in weights.c:
        num *= pochhammer(1 - k + 1 / (beta * cl), j)
    den = Fraction(1)
    for dj in weights.d:
        factor = pochhammer(Fraction(1 - k) - 1 / (beta * dj), j)
        if factor == 0:
            raise DomainError(f"Pochhammer pole in denominator for k={k}, j={j}, d={dj}")
        den *= factor
    return beta * rho_numeric(weights, -k) * kappa ** j * num / den / factorial(j)
