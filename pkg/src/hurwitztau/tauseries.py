"""The hypergeometric tau function as a truncated double expansion.

Schur-basis coefficients are content products r_lambda / h(lambda) held as
exact series in a formal weight-counting variable (one power per box of
lambda); converting to the power-sum basis and reading the coefficient of
beta^(|mu|+d) recovers the weighted Hurwitz number H^d(mu).  The numeric
beta stored on WeightData plays no role here: the expansion variable is
formal, which is what makes the dual-expansion check an exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .betaseries import BetaSeries, geometric_series
from .errors import CapacityError, DomainError
from .partitions import (
    PartitionT,
    as_partition,
    character,
    contents,
    enumerate_partitions,
    hook_product,
    weight,
    z_order,
)
from .weights import WeightData

DEFAULT_N_MAX = 6
DEFAULT_D_MAX = 4


def r_value(weights: WeightData, i: int, order: int) -> BetaSeries:
    """r_i = beta * G(i*beta) as a series in beta."""
    if abs(i) > weights.guard_bound:
        raise DomainError(f"index {i} outside guard bound {weights.guard_bound}")
    series = BetaSeries.monomial(1, 1, order)
    for cl in weights.c:
        series = series * BetaSeries({0: Fraction(1), 1: i * cl}, order)
    for dj in weights.d:
        series = series * geometric_series(i * dj, order)
    return series


def rho_value(weights: WeightData, i: int, order: int) -> BetaSeries:
    """rho_i from the explicit rational-weight product formula."""
    if abs(i) > weights.guard_bound:
        raise DomainError(f"index {i} outside guard bound {weights.guard_bound}")
    if i == 0:
        return BetaSeries.constant(1, order)
    if i > 0:
        series = BetaSeries.monomial(1, i, order + i)
        for k in range(1, i + 1):
            for cl in weights.c:
                series = series * BetaSeries({0: Fraction(1), 1: k * cl}, order + i)
            for dj in weights.d:
                series = series * geometric_series(k * dj, order + i)
        return _clip(series, order)
    m = -i
    series = BetaSeries.monomial(1, -m, order + m)
    for k in range(1, m):
        for dj in weights.d:
            series = series * BetaSeries({0: Fraction(1), 1: k * dj}, order + m)
        for cl in weights.c:
            series = series * geometric_series(k * cl, order + m)
    return _clip(series, order)


def _clip(series: BetaSeries, order: int) -> BetaSeries:
    return BetaSeries(series.coeffs, min(series.order, order))


def content_product(weights: WeightData, lam: PartitionT, order: int) -> BetaSeries:
    """r_lambda = product of r_(col-row) over the boxes of lambda."""
    lam = as_partition(lam)
    series = BetaSeries.constant(1, order + weight(lam))
    for c in contents(lam):
        series = series * r_value(weights, c, order + weight(lam))
    return _clip(series, order)


@dataclass(frozen=True)
class TauSchurExpansion:
    """Schur coefficients coeffs[lambda] = r_lambda / h(lambda), |lambda| <= N_max."""

    weights: WeightData
    n_max: int
    beta_order: int
    coeffs: dict[PartitionT, BetaSeries]


@dataclass(frozen=True)
class PowerSumExpansion:
    """Weighted Hurwitz numbers keyed by (mu, d), including parity-dead entries."""

    weights: WeightData
    n_max: int
    d_max: int
    coeffs: dict[tuple[PartitionT, int], Fraction]


def tau_schur(weights: WeightData, n_max: int = DEFAULT_N_MAX,
              beta_order: int | None = None) -> TauSchurExpansion:
    """All Schur coefficients of the tau function up to weight n_max."""
    if beta_order is None:
        beta_order = n_max + DEFAULT_D_MAX
    if n_max > weights.guard_bound:
        raise CapacityError(f"n_max {n_max} exceeds guard bound {weights.guard_bound}")
    coeffs: dict[PartitionT, BetaSeries] = {}
    for n in range(n_max + 1):
        for lam in enumerate_partitions(n):
            coeffs[lam] = content_product(weights, lam, beta_order) / hook_product(lam)
    return TauSchurExpansion(weights, n_max, beta_order, coeffs)


def schur_to_powersum(expansion: TauSchurExpansion,
                      d_max: int = DEFAULT_D_MAX) -> PowerSumExpansion:
    """Power-sum coefficients via the character change of basis.

    The p_mu coefficient is sum_lambda chi_lambda(mu)/z_mu * coeffs[lambda];
    H^d(mu) is its beta^(|mu|+d) coefficient.
    """
    out: dict[tuple[PartitionT, int], Fraction] = {}
    for n in range(1, expansion.n_max + 1):
        lams = enumerate_partitions(n)
        for mu in lams:
            series = BetaSeries({}, expansion.beta_order)
            for lam in lams:
                chi = character(lam, mu)
                if chi:
                    series = series + expansion.coeffs[lam] * Fraction(chi)
            series = series / z_order(mu)
            for d in range(min(d_max, expansion.beta_order - n) + 1):
                out[(mu, d)] = series.coefficient(n + d)
    return PowerSumExpansion(expansion.weights, expansion.n_max, d_max, out)


@lru_cache(maxsize=32)
def _powersum_cached(weights: WeightData, n_max: int, beta_order: int) -> PowerSumExpansion:
    return schur_to_powersum(tau_schur(weights, n_max, beta_order),
                             d_max=beta_order - 1)


def extract_weighted_hurwitz(weights: WeightData, d: int, mu,
                             n_max: int | None = None,
                             beta_order: int | None = None) -> Fraction:
    """H^d_G(mu) read off the tau-function double expansion."""
    mu_c = as_partition(mu)
    n = weight(mu_c)
    if n_max is None:
        n_max = max(n, DEFAULT_N_MAX)
    if beta_order is None:
        beta_order = n_max + DEFAULT_D_MAX
    if d > beta_order - n:
        raise CapacityError(
            f"d = {d} needs beta order {n + d}, expansion truncated at {beta_order}"
        )
    if n > n_max:
        raise CapacityError(f"|mu| = {n} exceeds n_max = {n_max}")
    table = _powersum_cached(weights, n_max, beta_order)
    return table.coeffs[(mu_c, d)]
