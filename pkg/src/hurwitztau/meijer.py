"""Numerical Mellin-Barnes evaluation of the adapted basis functions.

phi~_k(x) = C_k/(2 pi i) * integral of
    Gamma(1-k-s) prod_l Gamma(s + 1/(beta c_l)) / prod_m Gamma(s - 1/(beta d_m))
    * (-kappa x)^s ds
over a contour separating the right pole ladder 1-k, 2-k, ... from the left
ladders at -1/(beta c_l) - j.  Everything (including the normalization C_k)
is assembled in log space and exponentiated once per node.

Branch convention: (-kappa x)^s = exp(s Log(-kappa x)) with the principal
branch unless the caller supplies arg(-kappa x) explicitly.  The right-loop
value is branch independent (only integer poles are encircled); the
vertical contour for L > M+1 is not, which is why the sector is enforced.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cgamma import log_gamma
from .contours import ContourSpec, PoleStructure, right_loop_segments, vertical_segments
from .errors import AccuracyError, ArgumentError, DomainError
from .quadrature import integrate_contour
from .spectral import rho_numeric
from .weights import WeightData

LOG_TWO_PI_I = cmath.log(2j * math.pi)
SECTOR_MARGIN = 1e-3


@dataclass(frozen=True)
class MeijerResult:
    value: complex
    error: float
    n_nodes: int
    contour_kind: str
    sector: dict | None = None

    def as_dict(self) -> dict:
        return {
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "quadrature_error": self.error,
            "n_nodes": self.n_nodes,
            "contour_kind": self.contour_kind,
            "sector": self.sector,
        }


def _inverse_params(weights: WeightData) -> tuple[list[Fraction], list[Fraction]]:
    inv_c = [1 / (weights.beta * cl) for cl in weights.c]
    inv_d = [1 / (weights.beta * dj) for dj in weights.d]
    return inv_c, inv_d


def log_normalization(weights: WeightData, k: int) -> complex:
    """log C_k with C_k = prod Gamma(-1/(beta d)) / ((-beta)^(k-1) prod Gamma(1/(beta c)))."""
    inv_c, inv_d = _inverse_params(weights)
    for v in inv_c:
        if v.denominator == 1 and v <= 0:
            raise DomainError(f"Gamma(1/(beta c)) pole: argument {v}")
    for v in inv_d:
        if v.denominator == 1 and -v <= 0:
            raise DomainError(f"Gamma(-1/(beta d)) pole: argument {-v}")
    total = 0.0 + 0.0j
    for v in inv_d:
        total += log_gamma(complex(-v))
    for v in inv_c:
        total -= log_gamma(complex(v))
    total -= (k - 1) * cmath.log(complex(-weights.beta))
    return total


def normalization_C(weights: WeightData, k: int) -> complex:
    """C_k itself (real for real parameters up to roundoff)."""
    return cmath.exp(log_normalization(weights, k))


def _pole_structure(weights: WeightData, k: int) -> PoleStructure:
    inv_c, _ = _inverse_params(weights)
    return PoleStructure(
        right_start=float(1 - k),
        left_starts=tuple(-float(v) for v in inv_c),
    )


def _log_integrand_factory(weights: WeightData, k: int, w: complex, include_norm: bool = True):
    inv_c, inv_d = _inverse_params(weights)
    c_shifts = np.array([float(v) for v in inv_c])
    d_shifts = np.array([float(v) for v in inv_d])
    offset = (log_normalization(weights, k) - LOG_TWO_PI_I) if include_norm else 0.0

    def f_log(s: np.ndarray) -> np.ndarray:
        total = log_gamma(1 - k - s) + s * w + offset
        for shift in c_shifts:
            total = total + log_gamma(s + shift)
        for shift in d_shifts:
            total = total - log_gamma(s - shift)
        return total

    return f_log


def _branch_log(zeta: complex, branch_arg: float | None) -> complex:
    if branch_arg is None:
        return cmath.log(zeta)
    return math.log(abs(zeta)) + 1j * branch_arg


def sector_report(weights: WeightData, arg_zeta: float) -> dict:
    """Which published convergence sector the point satisfies (L > M+1 case)."""
    gap = weights.L - weights.M
    return {
        "arg_zeta": arg_zeta,
        "two_sided_full": abs(arg_zeta) < (gap + 1) * math.pi / 2,
        "one_sided_full": 0.0 < arg_zeta < (gap + 1) * math.pi / 2,
        "one_sided_conservative": 0.0 < arg_zeta < (gap - 1) * math.pi / 2,
        "enforced": "one_sided_conservative",
    }


def mellin_barnes_phi(
    weights: WeightData,
    k: int,
    x: complex,
    contour: ContourSpec | None = None,
    branch_arg: float | None = None,
    abs_tol: float = 1e-10,
    rel_tol: float = 1e-12,
) -> MeijerResult:
    """phi~_k(x) by contour quadrature, with a panel-refinement error estimate."""
    x = complex(x)
    if x == 0:
        raise ArgumentError("x must be nonzero")
    spec = contour or ContourSpec()
    kappa = weights.kappa()
    zeta = -complex(kappa) * x
    w = _branch_log(zeta, branch_arg)
    poles = _pole_structure(weights, k)
    f_log = _log_integrand_factory(weights, k, w)

    def f(s: np.ndarray) -> np.ndarray:
        return np.exp(f_log(s))

    L, M = weights.L, weights.M
    use_loop = spec.kind == "right-loop" or (spec.kind == "auto" and L <= M + 1)
    if use_loop:
        if L == M + 1 and abs(zeta) >= 1.0:
            raise DomainError(
                f"L = M+1 loop contour requires |kappa x| < 1, got {abs(zeta):.6g}"
            )
        if L > M + 1:
            raise DomainError("right-loop contour diverges for L > M+1")
        segments = right_loop_segments(poles, f_log, spec)
        value, err, n = integrate_contour(
            f, segments, spec.panel_length, abs_tol, rel_tol
        )
        return MeijerResult(value, err, n, "right-loop")

    # vertical separating contour, L > M+1 (asymptotic regime)
    sector = sector_report(weights, cmath.phase(zeta) if branch_arg is None else branch_arg)
    arg_zeta = sector["arg_zeta"]
    gap = L - M
    if not (SECTOR_MARGIN <= arg_zeta <= (gap - 1) * math.pi / 2 - SECTOR_MARGIN):
        raise DomainError(
            f"arg(-kappa x) = {arg_zeta:.4f} outside the enforced sector "
            f"(0, {(gap - 1) * math.pi / 2:.4f}) with margin {SECTOR_MARGIN}"
        )
    left_max = poles.left_max()
    if spec.shift is not None:
        sigma = spec.shift
    elif left_max is not None:
        sigma = 0.5 * (left_max + poles.right_start)
    else:
        sigma = poles.right_start - 1.0
    segments = vertical_segments(sigma, poles, f_log, spec)
    value, err, n = integrate_contour(f, segments, spec.panel_length, abs_tol, rel_tol)
    return MeijerResult(value, err, n, "vertical-with-detour", sector)


# --- series references ------------------------------------------------------

def _g_float(weights: WeightData, m: int) -> float:
    num = 1.0
    beta = float(weights.beta)
    for cl in weights.c:
        num *= 1.0 + m * beta * float(cl)
    den = 1.0
    for dj in weights.d:
        factor = 1.0 - m * beta * float(dj)
        if factor == 0.0:
            raise DomainError(f"G({m} beta) pole")
        den *= factor
    return num / den


def series_terms(weights: WeightData, k: int, x: complex, n_terms: int) -> list[complex]:
    """The first n_terms terms a_j x^(1-k+j) of the defining Laurent series."""
    x = complex(x)
    beta = float(weights.beta)
    a = float(rho_numeric(weights, -k)) * beta  # a_0 = beta rho_(-k)
    power = x ** (1 - k)
    terms = []
    for j in range(n_terms):
        terms.append(a * power)
        a = a * _g_float(weights, j + 1 - k) / (j + 1)
        power = power * x
    return terms


def series_reference(weights: WeightData, k: int, x: complex, n_terms: int) -> complex:
    """Floating partial sum of the defining series (asymptotic truncation
    when L > M+1)."""
    if weights.L == weights.M + 1 and abs(complex(weights.kappa()) * complex(x)) >= 1.0:
        raise DomainError("series diverges: L = M+1 needs |kappa x| < 1")
    return sum(series_terms(weights, k, x, n_terms))


def series_converged(
    weights: WeightData,
    k: int,
    x: complex,
    rel: float = 1e-15,
    max_terms: int = 400,
    settle: int = 4,
) -> complex:
    """Sum the series until `settle` consecutive terms fall below rel*|sum|."""
    if weights.L > weights.M + 1:
        raise DomainError("series does not converge for L > M+1")
    terms = series_terms(weights, k, x, max_terms)
    total = 0.0 + 0.0j
    quiet = 0
    for t in terms:
        total += t
        if abs(t) <= rel * max(abs(total), 1e-300):
            quiet += 1
            if quiet >= settle:
                return total
        else:
            quiet = 0
    raise AccuracyError(f"series not converged after {max_terms} terms at x = {x}")


# --- asymptotic remainder (L > M+1) ----------------------------------------

def remainder_integral(
    weights: WeightData,
    k: int,
    x: complex,
    trunc_order: int,
    branch_arg: float | None = None,
    spec: ContourSpec | None = None,
    rel_tol: float = 1e-9,
) -> complex:
    """phi~_k(x) minus the series truncated through x^trunc_order, computed
    directly as the Mellin-Barnes integral on the shifted vertical line
    Re s = trunc_order + 1/2.

    Evaluating the difference by subtraction would need absolute accuracy
    ~|x|^(trunc_order+1), far below double roundoff of the value itself;
    the shifted contour computes the remainder to full relative accuracy.
    """
    x = complex(x)
    spec = spec or ContourSpec()
    zeta = -complex(weights.kappa()) * x
    w = _branch_log(zeta, branch_arg)
    poles = _pole_structure(weights, k)
    f_log = _log_integrand_factory(weights, k, w)

    def f(s: np.ndarray) -> np.ndarray:
        return np.exp(f_log(s))

    sigma = trunc_order + 0.5
    left_max = poles.left_max()
    if left_max is not None and sigma <= left_max:
        raise DomainError("shifted contour would cross a left pole ladder")
    segments = vertical_segments(sigma, poles, f_log, spec)
    value, _, _ = integrate_contour(f, segments, spec.panel_length, 1e-300, rel_tol)
    return value


def asymptotic_remainder_check(
    weights: WeightData,
    k: int,
    trunc_order: int,
    x_values: list[complex],
    branch_arg: float | None = None,
) -> list[dict]:
    """Rows (x, |remainder|, |remainder|/|x|^(N+1/2)) for the Poincare
    asymptotics contract; the ratio must stay bounded as |x| shrinks."""
    if weights.L <= weights.M + 1:
        raise DomainError("asymptotic remainder check applies to L > M+1 only")
    rows = []
    for x in x_values:
        rem = abs(
            remainder_integral(weights, k, x, trunc_order, branch_arg=branch_arg)
        )
        rows.append(
            {
                "x": complex(x),
                "abs_x": abs(complex(x)),
                "remainder": rem,
                "bound_ratio": rem / abs(complex(x)) ** (trunc_order + 0.5),
            }
        )
    return rows


def belyi_case_eval(c1, c2, beta, k: int, x: complex, **kwargs) -> MeijerResult:
    """The L=2, M=0 (Belyi/dessins) case as a named convenience."""
    weights = WeightData(c=(c1, c2), d=(), beta=beta)
    return mellin_barnes_phi(weights, k, x, **kwargs)


# --- quantum curve residual by finite differences ---------------------------

def _poly_mul(p: list[float], q: list[float]) -> list[float]:
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _euler_powers_at(values_fn, x0: complex, max_order: int, h: float) -> list[complex]:
    """[f, D f, D^2 f, ...](x0) with D = x d/dx, via central differences plus
    one Richardson extrapolation step."""

    def d_tower(step: float) -> list[complex]:
        # derivatives f^(j)(x0) for j = 0..max_order from a 9-point stencil
        offsets = range(-4, 5)
        vals = [values_fn(x0 + i * step) for i in offsets]
        derivs = [vals[4]]
        if max_order >= 1:
            derivs.append(
                (vals[5] - vals[3]) * (2 / 3) / step - (vals[6] - vals[2]) / (12 * step)
            )
        if max_order >= 2:
            derivs.append(
                (-(vals[6] + vals[2]) / 12 + (vals[5] + vals[3]) * (4 / 3)
                 - vals[4] * (5 / 2)) / step**2
            )
        if max_order >= 3:
            derivs.append(
                ((vals[6] - vals[2]) - 2 * (vals[5] - vals[3])) / (2 * step**3)
            )
        return derivs

    coarse = d_tower(h)
    fine = d_tower(h / 2)
    orders = [2, 4, 4, 2]  # leading error order of each stencil above
    derivs = [
        (2 ** orders[j] * fine[j] - coarse[j]) / (2 ** orders[j] - 1)
        for j in range(max_order + 1)
    ]
    # D^m = sum_j S(m, j) x^j d^j/dx^j with Stirling numbers of the 2nd kind
    stirling = [[1]]
    for m in range(1, max_order + 1):
        row = [0] * (m + 1)
        prev = stirling[m - 1] + [0]
        for j in range(1, m + 1):
            below = prev[j - 1]
            same = prev[j] if j < m else 0
            row[j] = below + j * same
        stirling.append(row)
    powers = []
    for m in range(max_order + 1):
        total = 0.0 + 0.0j
        for j in range(m + 1):
            total += stirling[m][j] * x0**j * derivs[j]
        powers.append(total)
    return powers


def quantum_curve_fd_residual(
    weights: WeightData,
    k: int,
    x0: complex,
    fd_step: float = 0.02,
    **mb_kwargs,
) -> dict:
    """Relative residual of the eigen-relation for phi~_k at a point.

    (x G(beta D) - D) phi = (k-1) phi is checked in the denominator-cleared
    form  prod_l(1 + beta c_l (D-1)) (x phi) = prod_m(1 - beta d_m (D-1))
    (D + k - 1) phi,  obtained with the ladder identity x f(D) = f(D-1) x;
    both sides are then polynomial in the Euler operator and computable by
    central finite differences.
    """
    beta = float(weights.beta)

    def phi_at(x):
        return mellin_barnes_phi(weights, k, x, **mb_kwargs).value

    def xphi_at(x):
        return x * phi_at(x)

    lhs_poly = [1.0]
    for cl in weights.c:
        bc = beta * float(cl)
        lhs_poly = _poly_mul(lhs_poly, [1.0 - bc, bc])  # 1 + bc*(D-1)
    rhs_poly = [1.0]
    for dj in weights.d:
        bd = beta * float(dj)
        rhs_poly = _poly_mul(rhs_poly, [1.0 + bd, -bd])  # 1 - bd*(D-1)
    rhs_poly = _poly_mul(rhs_poly, [float(k - 1), 1.0])  # (D + k - 1)

    max_lhs = len(lhs_poly) - 1
    max_rhs = len(rhs_poly) - 1
    step = fd_step * abs(x0)
    u_powers = _euler_powers_at(xphi_at, x0, max_lhs, step)
    p_powers = _euler_powers_at(phi_at, x0, max_rhs, step)
    lhs = sum(c * u_powers[j] for j, c in enumerate(lhs_poly))
    rhs = sum(c * p_powers[j] for j, c in enumerate(rhs_poly))
    scale = max(abs(lhs), abs(rhs), 1e-300)
    return {
        "lhs": lhs,
        "rhs": rhs,
        "residual": abs(lhs - rhs),
        "relative_residual": abs(lhs - rhs) / scale,
    }
