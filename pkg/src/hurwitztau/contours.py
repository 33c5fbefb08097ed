"""Mellin-Barnes contour construction.

Two realizations: a right-loop hairpin that encircles the real poles
1-k, 2-k, ... clockwise (convergent whenever L <= M+1), and a vertical
separating line with optional semicircular detours (the L > M+1 case and
the asymptotic remainder estimates).  Truncation points are found by
scanning the actual integrand magnitude down to a 1e-18 tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import AccuracyError, DomainError
from .quadrature import Arc, Line, Segment

TAIL_DROP = 1e-18
SCAN_LIMIT = 600.0


@dataclass(frozen=True)
class ContourSpec:
    """Discretization choices for a Mellin-Barnes contour."""

    kind: str = "auto"  # right-loop | vertical-with-detour | auto
    shift: float | None = None
    height: float | None = None
    nodes_per_unit: int = 32
    detour_radius: float = 0.25

    @property
    def panel_length(self) -> float:
        from .quadrature import GL_POINTS

        return GL_POINTS / self.nodes_per_unit


@dataclass(frozen=True)
class PoleStructure:
    """Real pole families of the integrand: right ladder and left ladders."""

    right_start: float  # poles at right_start + j, j >= 0
    left_starts: tuple[float, ...]  # ladders left_start - j, j >= 0

    def left_max(self) -> float | None:
        return max(self.left_starts) if self.left_starts else None

    def nearest_pole(self, sigma: float, span: int = 80) -> float | None:
        candidates = [self.right_start + j for j in range(span)]
        for start in self.left_starts:
            candidates.extend(start - j for j in range(span))
        if not candidates:
            return None
        return min(candidates, key=lambda p: abs(p - sigma))


def _magnitude(f_log: Callable[[np.ndarray], np.ndarray], s: complex) -> float:
    value = complex(np.asarray(f_log(np.array([s], dtype=complex)))[0])
    return math.exp(min(value.real, 700.0))


def right_loop_segments(
    poles: PoleStructure,
    f_log: Callable[[np.ndarray], np.ndarray],
    spec: ContourSpec,
) -> list[Segment]:
    """Hairpin from +inf below the axis, around the leftmost pole, back above.

    Clockwise orientation; (1/2 pi i) * integral then equals the residue sum
    over the right ladder.
    """
    r = spec.detour_radius
    left_max = poles.left_max()
    if spec.shift is not None:
        edge = spec.shift
    elif left_max is None:
        edge = poles.right_start - 2.0
    else:
        edge = 0.5 * (left_max + poles.right_start)
    if edge >= poles.right_start - r or (left_max is not None and edge <= left_max + r):
        raise DomainError(
            f"cannot separate pole families: edge {edge} vs right {poles.right_start}, "
            f"left {left_max} (radius {r})"
        )
    # scan rightwards for the truncation abscissa
    running_max = 0.0
    sigma = edge
    while True:
        mag = _magnitude(f_log, sigma + 1j * r) + _magnitude(f_log, sigma - 1j * r)
        running_max = max(running_max, mag)
        if sigma > edge + 6.0 and mag <= TAIL_DROP * running_max:
            break
        sigma += 1.0
        if sigma - edge > SCAN_LIMIT:
            raise DomainError(
                "integrand does not decay along the right loop "
                "(L = M+1 requires |kappa x| < 1)"
            )
    trunc = sigma + 1.0
    return [
        Line(complex(trunc, -r), complex(edge, -r)),
        Line(complex(edge, -r), complex(edge, r)),
        Line(complex(edge, r), complex(trunc, r)),
    ]


def vertical_segments(
    sigma: float,
    poles: PoleStructure,
    f_log: Callable[[np.ndarray], np.ndarray],
    spec: ContourSpec,
    bulge_left: bool | None = None,
) -> list[Segment]:
    """Upward vertical line Re s = sigma with a semicircular detour if a real
    pole sits within detour_radius of the line."""
    r = spec.detour_radius
    if spec.height is not None:
        height = spec.height
    else:
        running_max = 0.0
        t = 1.0
        while True:
            mag = _magnitude(f_log, sigma + 1j * t) + _magnitude(f_log, sigma - 1j * t)
            running_max = max(running_max, mag)
            if t > 6.0 and mag <= TAIL_DROP * running_max:
                break
            t += 1.0
            if t > SCAN_LIMIT:
                raise AccuracyError("integrand does not decay along the vertical contour")
        height = t + 1.0

    nearest = poles.nearest_pole(sigma)
    if nearest is None or abs(nearest - sigma) >= r:
        return [Line(complex(sigma, -height), complex(sigma, height))]

    # detour: follow the circle |s - nearest| = r between the line crossings
    d = sigma - nearest
    y_star = math.sqrt(r * r - d * d)
    phi_lo = math.atan2(-y_star, d)
    phi_hi = math.atan2(y_star, d)
    if bulge_left is None:
        # right-ladder poles stay right of the contour (bulge left);
        # left-ladder poles stay left (bulge right)
        steps = round(nearest - poles.right_start)
        bulge_left = steps >= 0 and abs(nearest - poles.right_start - steps) < 1e-9
    if bulge_left:
        arc = Arc(complex(nearest, 0.0), r, phi_lo, phi_hi - 2.0 * math.pi)
    else:
        arc = Arc(complex(nearest, 0.0), r, phi_lo, phi_hi)
    return [
        Line(complex(sigma, -height), complex(sigma, -y_star)),
        arc,
        Line(complex(sigma, y_star), complex(sigma, height)),
    ]
