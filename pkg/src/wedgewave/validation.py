"""Independent checks: brute-force quadrature, finite-difference residuals
for the wave and Helmholtz equations, and boundary-trace reports.

Everything here deliberately avoids the adaptive machinery so it can serve
as an oracle for it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonFiniteSampleError
from .geometry import BoundaryKind, WedgeConfig
from .profiles import Profile
from .quadrature import QuadratureSpec
from . import spectral, timedomain

_DEFAULT_QUAD = QuadratureSpec()

# theta step of the one-sided face stencils; normal derivative is (1/rho) d/dtheta
_FACE_STEP = 1e-4

# edge neighborhood rho < 0.1 is excluded: gradients may blow up there
_RHO_GRID = np.linspace(0.1, 5.0, 50)


def oracle_quadrature(integrand, a: float, b: float, n: int) -> complex:
    """Composite trapezoid with n nodes; deterministic reference integrator."""
    if n < 2:
        raise DomainError(f"need at least 2 nodes, got {n!r}")
    x = np.linspace(a, b, n)
    try:
        vals = np.asarray(integrand(x))
        if vals.shape != x.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([integrand(xi) for xi in x])
    if not np.all(np.isfinite(vals)):
        raise NonFiniteSampleError(f"integrand not finite on [{a!r}, {b!r}]")
    return complex(np.trapezoid(vals, x))


def wave_residual(field, point, h: float) -> float:
    """|d^2_t u - Laplace u| at point=(rho, theta, t), central differences.

    field is a callable (rho, theta, t) -> complex, smooth on the 2h-ball
    around the point; stencil angles are delivered in [0, 2*pi).
    """
    rho, theta, t = point
    y0 = np.array([rho * math.cos(theta), rho * math.sin(theta)])

    def at(y, tt):
        r = math.hypot(y[0], y[1])
        th = math.atan2(y[1], y[0]) % (2.0 * math.pi)
        return field(r, th, tt)

    center = field(rho, theta, t)
    lap = (at(y0 + [h, 0.0], t) + at(y0 - [h, 0.0], t)
           + at(y0 + [0.0, h], t) + at(y0 - [0.0, h], t)
           - 4.0 * center) / h ** 2
    dtt = (field(rho, theta, t + h) + field(rho, theta, t - h)
           - 2.0 * center) / h ** 2
    return abs(dtt - lap)


def helmholtz_residual(S, y, omega: complex, h: float) -> float:
    """|(-Laplace - omega^2) S| at cartesian y, 5-point stencil."""
    y = np.asarray(y, dtype=float)
    center = S(y)
    lap = (S(y + [h, 0.0]) + S(y - [h, 0.0])
           + S(y + [0.0, h]) + S(y - [0.0, h])
           - 4.0 * center) / h ** 2
    return abs(-lap - omega * omega * center)


@dataclass(frozen=True)
class TimeDomainMode:
    """Boundary check of the total time-domain field at one instant."""

    p: Profile
    t: float


@dataclass(frozen=True)
class StationaryMode:
    """Boundary check of the total stationary density at one frequency."""

    omega: complex


@dataclass(frozen=True)
class BoundaryReport:
    bc: str
    mode: str
    face1_condition: str
    face2_condition: str
    rho_grid: tuple[float, ...]
    face1_pointwise: tuple[float, ...]
    face2_pointwise: tuple[float, ...]

    @property
    def face1_residual(self) -> float:
        return max(self.face1_pointwise)

    @property
    def face2_residual(self) -> float:
        return max(self.face2_pointwise)

    def to_json(self) -> str:
        payload = {
            "bc": self.bc,
            "mode": self.mode,
            "faces": [
                {
                    "face": k,
                    "condition": cond,
                    "max_residual": max(vals),
                    "pointwise": [
                        {"rho": r, "residual": v}
                        for r, v in zip(self.rho_grid, vals)
                    ],
                }
                for k, cond, vals in (
                    (1, self.face1_condition, self.face1_pointwise),
                    (2, self.face2_condition, self.face2_pointwise),
                )
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def _face_conditions(bc: BoundaryKind) -> tuple[str, str]:
    # face 1 is theta = 2*pi, face 2 is theta = phi; the mixed problem is
    # Neumann on face 1 and Dirichlet on face 2
    return {
        BoundaryKind.DD: ("dirichlet", "dirichlet"),
        BoundaryKind.NN: ("neumann", "neumann"),
        BoundaryKind.DN: ("neumann", "dirichlet"),
    }[bc]


def _incident_density(rho: float, theta: float, omega: complex,
                      cfg: WedgeConfig) -> complex:
    return np.exp(1j * omega * rho * math.cos(theta - cfg.alpha))


def _stationary_total(rho, theta, omega, cfg, bc, quad):
    return (_incident_density(rho, theta, omega, cfg)
            + spectral.S_r(rho, theta, omega, cfg, bc)
            + spectral.S_d(rho, theta, omega, cfg, bc, quad))


def _stationary_planewave_dtheta(rho, theta, omega, cfg, bc):
    # exact theta-derivative of the incident + reflected plane waves; only
    # S_d is left to finite differences in the Neumann residual
    out = (-1j * omega * rho * math.sin(theta - cfg.alpha)
           * _incident_density(rho, theta, omega, cfg))
    k = timedomain._reflection_sector(theta, cfg)
    if k != 0:
        theta_k = cfg.critical_angles()[k - 1]
        sigma = timedomain._REFLECTION_SIGNS[bc][k - 1]
        out += (-1j * omega * rho * math.sin(theta - theta_k)
                * sigma * np.exp(1j * omega * rho * math.cos(theta - theta_k)))
    return out


def _one_sided_dtheta(f, theta_face: float, inward: float) -> complex:
    # 3-point second-order stencil stepping into the domain
    h = _FACE_STEP
    f0 = f(theta_face)
    f1 = f(theta_face + inward * h)
    f2 = f(theta_face + inward * 2.0 * h)
    return inward * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h)


def _face_residual_stationary(rho, theta_face, inward, cond, omega, cfg, bc,
                              quad) -> float:
    if cond == "dirichlet":
        return abs(_stationary_total(rho, theta_face, omega, cfg, bc, quad))
    dtheta = _stationary_planewave_dtheta(rho, theta_face, omega, cfg, bc)
    dtheta += _one_sided_dtheta(
        lambda th: spectral.S_d(rho, th, omega, cfg, bc, quad),
        theta_face, inward)
    return abs(dtheta) / rho


def _face_residual_timedomain(rho, theta_face, inward, cond, p, t, cfg, bc,
                              quad) -> float:
    def u(th):
        return timedomain.total(rho, th, t, p, cfg, bc, quad).u_total

    if cond == "dirichlet":
        return abs(u(theta_face))
    return abs(_one_sided_dtheta(u, theta_face, inward)) / rho


def boundary_report(cfg: WedgeConfig, bc: BoundaryKind,
                    mode: TimeDomainMode | StationaryMode,
                    quad: QuadratureSpec = _DEFAULT_QUAD) -> BoundaryReport:
    """Max trace residual along each face over a 50-point rho-grid in [0.1, 5]."""
    cond1, cond2 = _face_conditions(bc)
    faces = (
        (2.0 * math.pi, -1.0, cond1),
        (cfg.phi, 1.0, cond2),
    )
    pointwise: list[tuple[float, ...]] = []
    for theta_face, inward, cond in faces:
        vals = []
        for rho in _RHO_GRID:
            if isinstance(mode, StationaryMode):
                vals.append(_face_residual_stationary(
                    float(rho), theta_face, inward, cond, mode.omega, cfg, bc,
                    quad))
            else:
                vals.append(_face_residual_timedomain(
                    float(rho), theta_face, inward, cond, mode.p, mode.t, cfg,
                    bc, quad))
        pointwise.append(tuple(vals))
    mode_desc = (f"stationary omega={mode.omega!r}"
                 if isinstance(mode, StationaryMode)
                 else f"timedomain t={mode.t!r} profile={type(mode.p).__name__}")
    return BoundaryReport(
        bc=bc.name,
        mode=mode_desc,
        face1_condition=cond1,
        face2_condition=cond2,
        rho_grid=tuple(float(r) for r in _RHO_GRID),
        face1_pointwise=pointwise[0],
        face2_pointwise=pointwise[1],
    )
