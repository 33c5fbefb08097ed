"""Composite Gauss-Legendre quadrature over piecewise contours in C.

Contours are lists of line segments and circular arcs.  The error estimate
is the change under one panel halving; refinement continues until the
combined absolute/relative target is met.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import AccuracyError

GL_POINTS = 16


@lru_cache(maxsize=4)
def _gl_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


@dataclass(frozen=True)
class Line:
    start: complex
    end: complex

    def length(self) -> float:
        return abs(self.end - self.start)

    def nodes(self, panel_length: float) -> tuple[np.ndarray, np.ndarray]:
        xi, wi = _gl_nodes(GL_POINTS)
        n_panels = max(1, math.ceil(self.length() / panel_length))
        edges = np.linspace(0.0, 1.0, n_panels + 1)
        direction = self.end - self.start
        zs = []
        ws = []
        for left, right in zip(edges[:-1], edges[1:]):
            mid = 0.5 * (left + right)
            half = 0.5 * (right - left)
            zs.append(self.start + direction * (mid + half * xi))
            ws.append(direction * half * wi)
        return np.concatenate(zs), np.concatenate(ws)


@dataclass(frozen=True)
class Arc:
    center: complex
    radius: float
    theta_start: float
    theta_end: float

    def length(self) -> float:
        return self.radius * abs(self.theta_end - self.theta_start)

    def nodes(self, panel_length: float) -> tuple[np.ndarray, np.ndarray]:
        xi, wi = _gl_nodes(GL_POINTS)
        n_panels = max(1, math.ceil(self.length() / panel_length))
        edges = np.linspace(self.theta_start, self.theta_end, n_panels + 1)
        zs = []
        ws = []
        for left, right in zip(edges[:-1], edges[1:]):
            mid = 0.5 * (left + right)
            half = 0.5 * (right - left)
            theta = mid + half * xi
            phase = np.exp(1j * theta)
            zs.append(self.center + self.radius * phase)
            ws.append(1j * self.radius * phase * half * wi)
        return np.concatenate(zs), np.concatenate(ws)


Segment = Line | Arc


def _evaluate(f: Callable[[np.ndarray], np.ndarray], segments: Sequence[Segment],
              panel_length: float) -> tuple[complex, int]:
    total = 0.0 + 0.0j
    count = 0
    for seg in segments:
        zs, ws = seg.nodes(panel_length)
        total += complex(np.sum(f(zs) * ws))
        count += len(zs)
    return total, count


def integrate_contour(
    f: Callable[[np.ndarray], np.ndarray],
    segments: Sequence[Segment],
    panel_length: float = 0.5,
    abs_tol: float = 1e-10,
    rel_tol: float = 1e-12,
    max_halvings: int = 6,
) -> tuple[complex, float, int]:
    """Integrate f along the contour; returns (value, error_estimate, n_nodes).

    The error estimate is the last panel-halving delta.  AccuracyError if
    halving stalls above both tolerance targets.
    """
    coarse, n_nodes = _evaluate(f, segments, panel_length)
    for _ in range(max_halvings):
        panel_length *= 0.5
        fine, n_nodes = _evaluate(f, segments, panel_length)
        delta = abs(fine - coarse)
        if delta <= abs_tol or delta <= rel_tol * abs(fine):
            return fine, delta, n_nodes
        coarse = fine
    raise AccuracyError(
        f"quadrature not resolved: last refinement delta {delta:.3e} "
        f"above abs {abs_tol:.1e} / rel {rel_tol:.1e}"
    )
