"""Time-domain field of a plane pulse hitting the wedge: incident, reflected,
diffracted, and total parts.

The incident pulse is u_in(y, t) = F(t - n0.y).  Geometrical reflections
carry the same retarded shape along the mirror directions,

    u_r = sigma_k * F(t - rho*cos(theta - theta_k)),

nonzero only in the reflection sector attached to face k, with sign sigma_k
= -1 at a Dirichlet face and +1 at a Neumann face.  The diffracted wave is
the single contour integral

    u_d(rho, theta, t) = (i / 4*Phi) * int_{-l}^{l} Z(beta + i*theta)
                         * F(t - rho*cosh(beta)) dbeta,

with half-length l = l_of(t/rho); it vanishes for t <= rho (causality: the
edge signal needs time rho to arrive).  For an impulse pulse the integral
collapses to the two roots beta = +-l, giving the impulse response

    J_d(rho, theta, t) = (i / 4*Phi) * [Z(l + i*theta) + Z(-l + i*theta)]
                         / sqrt(t^2 - rho^2),     t > rho,

with the inverse-square-root blowup at the cylindrical front.  Crossing a
critical ray theta_k, u_d jumps by exactly minus the reflected-wave jump,
keeping the total field continuous; jump() measures this by Richardson
extrapolation from both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CriticalRayError,
    DeltaNotPointwiseError,
    DomainError,
    WavefrontSingularityError,
)
from .geometry import BoundaryKind, WedgeConfig
from .heaviside import l_of
from .kernels import Z_kernel, folded_Z
from .profiles import Delta, Profile, eval_profile, Tabulated
from .quadrature import QuadratureSpec, adaptive_gauss_kronrod

_DEFAULT_QUAD = QuadratureSpec()

# reflected-wave signs per (sector 1, sector 2); Dirichlet face flips the pulse
_REFLECTION_SIGNS = {
    BoundaryKind.DD: (-1.0, -1.0),
    BoundaryKind.NN: (1.0, 1.0),
    BoundaryKind.DN: (-1.0, 1.0),
}

# within this angular distance of a critical ray the kernel peaks sharply at
# beta = 0 and the quadrature is seeded with a breakpoint there
_NEAR_CRITICAL = 1e-2


@dataclass(frozen=True)
class FieldSample:
    """One space-time sample of the field decomposition."""

    rho: float
    theta: float
    t: float
    u_in: complex
    u_r: complex
    u_d: complex
    u_total: complex


@dataclass(frozen=True)
class ImpulseDescriptor:
    """Reflected impulse at a point: arrival time and weight (0 in the middle sector)."""

    arrival: float | None
    weight: float


def incident(y, t: float, p: Profile, cfg: WedgeConfig) -> complex:
    """Incident plane pulse F(t - n0.y) at cartesian point y."""
    y = np.asarray(y, dtype=float)
    return eval_profile(p, t - float(cfg.n0 @ y))


def _reflection_sector(theta: float, cfg: WedgeConfig) -> int:
    """1 or 2 inside a reflection sector (faces and rays included), else 0."""
    if not cfg.exterior_contains(theta):
        raise DomainError(f"theta={theta!r} outside the exterior [phi, 2*pi]")
    if theta <= cfg.theta1:
        return 1
    if theta >= cfg.theta2:
        return 2
    return 0


def reflected(rho: float, theta: float, t: float, p: Profile, cfg: WedgeConfig,
              bc: BoundaryKind) -> complex:
    """Geometrical reflected wave; identically 0 in the middle sector."""
    if isinstance(p, Delta):
        raise DeltaNotPointwiseError("delta pulse has no pointwise values")
    if rho < 0.0:
        raise DomainError(f"rho must be nonnegative, got {rho!r}")
    k = _reflection_sector(theta, cfg)
    if k == 0:
        return 0.0
    theta_k = cfg.critical_angles()[k - 1]
    sigma = _REFLECTION_SIGNS[bc][k - 1]
    return sigma * eval_profile(p, t - rho * math.cos(theta - theta_k))


def reflected_delta(rho: float, theta: float, cfg: WedgeConfig, bc: BoundaryKind,
                    eps_ray: float = 1e-6) -> ImpulseDescriptor:
    """Arrival time and weight of the reflected impulse for a delta pulse."""
    for theta_k in cfg.critical_angles():
        if abs(theta - theta_k) <= eps_ray:
            raise CriticalRayError(
                f"theta={theta!r} within {eps_ray!r} of critical direction {theta_k!r}"
            )
    k = _reflection_sector(theta, cfg)
    if k == 0:
        return ImpulseDescriptor(arrival=None, weight=0.0)
    theta_k = cfg.critical_angles()[k - 1]
    return ImpulseDescriptor(
        arrival=rho * math.cos(theta - theta_k),
        weight=_REFLECTION_SIGNS[bc][k - 1],
    )


def _diffracted_guards(rho: float, theta: float, p: Profile, cfg: WedgeConfig,
                       quad: QuadratureSpec) -> None:
    if isinstance(p, Delta):
        raise DeltaNotPointwiseError(
            "delta pulse: use diffracted_delta / reflected_delta"
        )
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho!r}")
    if not cfg.exterior_contains(theta):
        raise DomainError(f"theta={theta!r} outside the exterior [phi, 2*pi]")
    for theta_k in cfg.critical_angles():
        if abs(theta - theta_k) <= quad.eps_ray:
            raise CriticalRayError(
                f"theta={theta!r} within {quad.eps_ray!r} of critical "
                f"direction {theta_k!r}"
            )


def diffracted(rho: float, theta: float, t: float, p: Profile, cfg: WedgeConfig,
               bc: BoundaryKind, quad: QuadratureSpec = _DEFAULT_QUAD) -> complex:
    """Diffracted wave by adaptive quadrature of the kernel integral."""
    _diffracted_guards(rho, theta, p, cfg, quad)
    lam = t / rho
    if lam <= 1.0:
        return 0.0
    half = l_of(lam)

    def integrand(beta: np.ndarray) -> np.ndarray:
        kernel = Z_kernel(beta + 1j * theta, cfg, bc)
        return kernel * eval_profile(p, t - rho * np.cosh(beta))

    breakpoints = [0.0]
    if isinstance(p, Tabulated):
        # interpolation kinks at sample times map to kinks in beta
        for s_j in p.times:
            if (t - s_j) / rho > 1.0:
                beta_j = math.acosh((t - s_j) / rho)
                if beta_j < half:
                    breakpoints.extend([-beta_j, beta_j])
    value = adaptive_gauss_kronrod(integrand, -half, half, quad,
                                   breakpoints=breakpoints)
    return 1j / (4.0 * cfg.Phi) * value


def diffracted_delta(rho: float, theta: float, t: float, cfg: WedgeConfig,
                     bc: BoundaryKind, eps_ray: float = 1e-6) -> complex:
    """Impulse response J_d; 0 before the front, singular exactly on it."""
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho!r}")
    if not cfg.exterior_contains(theta):
        raise DomainError(f"theta={theta!r} outside the exterior [phi, 2*pi]")
    if abs(t - rho) <= 1e-12 * rho:
        raise WavefrontSingularityError(
            f"t={t!r} within 1e-12*rho of the cylindrical front t=rho={rho!r}"
        )
    if t < rho:
        return 0.0
    half = l_of(t / rho)
    kernel = folded_Z(half, theta, cfg, bc, eps_ray=eps_ray)
    return 1j / (4.0 * cfg.Phi) * kernel / math.sqrt(t * t - rho * rho)


def total(rho: float, theta: float, t: float, p: Profile, cfg: WedgeConfig,
          bc: BoundaryKind, quad: QuadratureSpec = _DEFAULT_QUAD) -> FieldSample:
    """Full decomposition u = u_in + u_r + u_d at one space-time point."""
    y = np.array([rho * math.cos(theta), rho * math.sin(theta)])
    u_in = complex(incident(y, t, p, cfg))
    u_r = complex(reflected(rho, theta, t, p, cfg, bc))
    u_d = complex(diffracted(rho, theta, t, p, cfg, bc, quad))
    return FieldSample(rho=rho, theta=theta, t=t, u_in=u_in, u_r=u_r, u_d=u_d,
                       u_total=u_in + u_r + u_d)


def jump(rho: float, t: float, k: int, p: Profile, cfg: WedgeConfig,
         bc: BoundaryKind, quad: QuadratureSpec = _DEFAULT_QUAD,
         eps: float = 1e-3) -> complex:
    """Diffracted-wave jump across critical ray k, Richardson-extrapolated.

    Returns the limit of u_d(theta_k + e) - u_d(theta_k - e) as e -> 0,
    using first-order extrapolation from e and e/2 on each side.
    """
    if k not in (1, 2):
        raise DomainError(f"critical ray index must be 1 or 2, got {k!r}")
    theta_k = cfg.critical_angles()[k - 1]
    sides = {}
    for side in (1.0, -1.0):
        coarse = diffracted(rho, theta_k + side * eps, t, p, cfg, bc, quad)
        fine = diffracted(rho, theta_k + side * eps / 2.0, t, p, cfg, bc, quad)
        sides[side] = 2.0 * fine - coarse
    return sides[1.0] - sides[-1.0]
