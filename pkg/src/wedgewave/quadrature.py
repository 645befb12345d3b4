"""Adaptive quadrature on finite intervals and straight complex contours.

A 7/15-point embedded Gauss pair is applied per interval, with global error
control: on each pass every interval whose error estimate exceeds its share
of the tolerance is bisected, and all new rule points are evaluated in one
vectorized call.  Integrands must accept 1-d numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, NonFiniteSampleError, QuadratureFailureError
from .kernels import DecayBound

_X7, _W7 = np.polynomial.legendre.leggauss(7)
_X15, _W15 = np.polynomial.legendre.leggauss(15)

# narrower than this (relative to the original span) means the error estimate
# is dominated by roundoff and further bisection cannot help
_MIN_WIDTH_REL = 1e-14


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budgets shared by all integral evaluations.

    truncation_B, when set, overrides the decay-derived truncation length of
    infinite kernel integrals; eps_ray is the exclusion half-width around the
    critical directions.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 4000
    truncation_B: float | None = None
    eps_ray: float = 1e-6

    def __post_init__(self) -> None:
        if self.rel_tol < 0.0 or self.abs_tol <= 0.0:
            raise DomainError("need rel_tol >= 0 and abs_tol > 0")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")
        if self.eps_ray <= 0.0:
            raise DomainError("eps_ray must be positive")


def truncation_length(bound: DecayBound, abs_tol: float) -> float:
    """Smallest B with tail bound C * exp(-rate*B) / rate <= abs_tol / 10."""
    B = math.log(10.0 * bound.C / (bound.rate * abs_tol)) / bound.rate
    return max(B, 1.0)


def _apply_rules(f: Callable, lo: np.ndarray, hi: np.ndarray):
    """Return (I15, err) per interval, evaluating f once on all rule points."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = np.concatenate([
        (mid[:, None] + half[:, None] * _X7[None, :]).ravel(),
        (mid[:, None] + half[:, None] * _X15[None, :]).ravel(),
    ])
    y = np.asarray(f(x))
    if not np.all(np.isfinite(y)):
        raise NonFiniteSampleError("integrand returned nan or inf")
    n = lo.size
    y7 = y[: 7 * n].reshape(n, 7)
    y15 = y[7 * n:].reshape(n, 15)
    i7 = half * (y7 @ _W7)
    i15 = half * (y15 @ _W15)
    return i15, np.abs(i15 - i7)


def adaptive_gauss_kronrod(f: Callable, a: float, b: float, spec: QuadratureSpec,
                           breakpoints: Sequence[float] = ()) -> complex:
    """Integrate f over [a, b] to spec tolerances; f maps real arrays to complex."""
    if a == b:
        return 0.0 + 0.0j
    edges = [a] + sorted(p for p in breakpoints if a < p < b) + [b]
    lo = np.asarray(edges[:-1], dtype=float)
    hi = np.asarray(edges[1:], dtype=float)
    vals, errs = _apply_rules(f, lo, hi)
    min_width = _MIN_WIDTH_REL * abs(b - a)
    n_subdiv = 0
    while True:
        total = complex(np.sum(vals))
        tol = max(spec.abs_tol, spec.rel_tol * abs(total))
        if float(np.sum(errs)) <= tol:
            return total
        split = errs > tol / (2.0 * lo.size)
        if np.any(split & (hi - lo < min_width)):
            raise QuadratureFailureError(
                "interval width reached roundoff before the tolerance was met"
            )
        n_subdiv += int(np.count_nonzero(split))
        if n_subdiv > spec.max_subdivisions:
            raise QuadratureFailureError(
                f"exceeded {spec.max_subdivisions} subdivisions "
                f"(remaining error {float(np.sum(errs)):.3e}, tol {tol:.3e})"
            )
        mid = 0.5 * (lo[split] + hi[split])
        new_lo = np.concatenate([lo[~split], lo[split], mid])
        new_hi = np.concatenate([hi[~split], mid, hi[split]])
        keep_vals, keep_errs = vals[~split], errs[~split]
        fresh_vals, fresh_errs = _apply_rules(f, np.concatenate([lo[split], mid]),
                                              np.concatenate([mid, hi[split]]))
        lo, hi = new_lo, new_hi
        vals = np.concatenate([keep_vals, fresh_vals])
        errs = np.concatenate([keep_errs, fresh_errs])


def integrate_path(f: Callable, waypoints: Sequence[complex],
                   spec: QuadratureSpec) -> complex:
    """Integrate f along the polyline through waypoints; f maps complex arrays to complex."""
    if len(waypoints) < 2:
        raise DomainError("a contour needs at least two waypoints")
    total = 0.0 + 0.0j
    for z0, z1 in zip(waypoints[:-1], waypoints[1:]):
        dz = complex(z1) - complex(z0)
        if dz == 0.0:
            continue
        total += adaptive_gauss_kronrod(
            lambda s, z0=z0, dz=dz: f(z0 + s * dz) * dz, 0.0, 1.0, spec
        )
    return total
