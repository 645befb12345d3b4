"""Stationary densities and limiting amplitudes.

S_r is the geometric reflected density, piecewise sigma_k *
e^{i*omega*rho*cos(theta - theta_k)} in the reflection sectors and 0 in the
middle.  S_d is the diffracted density

    S_d(rho, theta, omega) = (i / 4*Phi) * int_0^inf ZZ_theta(beta)
                             * e^{i*omega*rho*cosh(beta)} dbeta,

with ZZ_theta the folded kernel Z(beta + i*theta) + Z(-beta + i*theta); the
scattered density is S_s = S_r + S_d.  The integral converges for Im omega
>= 0 thanks to the kernel decay, but on the real frequency axis the phase
omega*rho*cosh(beta) makes the integrand oscillate impossibly fast long
before the kernel has died out.  For Re omega != 0 the path is therefore
bent into the beta half-plane where the exponential damps: up the imaginary
axis to i*s*delta (s the sign of Re omega, delta below the first kernel
pole) and then horizontally.  On that leg

    |e^{i*omega*rho*cosh(x + i*s*delta)}|
        = e^{-rho*(|Re omega|*sinh(x)*sin(delta) + Im omega*cosh(x)*cos(delta))},

so a few oscillation cycles survive regardless of omega*rho.  For purely
imaginary (or zero) frequency the integrand already decays on the real axis
and a truncated interval suffices.

The slowly varying amplitude of the time-domain diffracted wave for a
switched-on harmonic pulse, A_d(t) = e^{i*omega0*t} * u_d(t), approaches
the stationary amplitude a0 * S_d(rho, theta, omega0) as t grows; amplitude
and limiting_amplitude expose the two sides of that comparison.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import DomainError
from .geometry import BoundaryKind, WedgeConfig
from .kernels import c_offsets, decay_bound, folded_Z
from .profiles import Profile, profile_carrier
from .quadrature import (
    QuadratureSpec,
    adaptive_gauss_kronrod,
    integrate_path,
    truncation_length,
)
from .timedomain import _REFLECTION_SIGNS, _reflection_sector, diffracted

_DEFAULT_QUAD = QuadratureSpec()

# fraction of the distance to the nearest kernel pole used as contour height
_POLE_CLEARANCE = 0.75


def S_r(rho: float, theta: float, omega: complex, cfg: WedgeConfig,
        bc: BoundaryKind) -> complex:
    """Reflected density: sector-wise plane wave, 0 in the middle sector."""
    if rho < 0.0:
        raise DomainError(f"rho must be nonnegative, got {rho!r}")
    k = _reflection_sector(theta, cfg)
    if k == 0:
        return 0.0
    theta_k = cfg.critical_angles()[k - 1]
    sigma = _REFLECTION_SIGNS[bc][k - 1]
    return sigma * cmath.exp(1j * omega * rho * math.cos(theta - theta_k))


def _contour_height(theta: float, cfg: WedgeConfig, bc: BoundaryKind) -> float:
    """Height below the first pole of the folded kernel on the imaginary axis."""
    c = np.asarray(c_offsets(theta, cfg, bc))
    dist = np.min(np.abs(c - math.pi * np.round(c / math.pi)))
    return min(_POLE_CLEARANCE * float(dist) / cfg.q, 1.0)


def _damping_target(C: float, abs_tol: float) -> float:
    # pointwise integrand bound at the far end of the path; the extra 5
    # absorbs the O(1/decay) tail length
    return math.log((1.0 + C) / abs_tol) + 5.0


def _sd_integral(rho: float, theta: float, omega: complex, cfg: WedgeConfig,
                 bc: BoundaryKind, quad: QuadratureSpec) -> complex:
    bound = decay_bound(cfg, bc, theta)
    target = _damping_target(bound.C, quad.abs_tol)
    a, b = omega.real, omega.imag

    def integrand(beta: np.ndarray) -> np.ndarray:
        kernel = folded_Z(beta, theta, cfg, bc, eps_ray=quad.eps_ray)
        return kernel * np.exp(1j * omega * rho * np.cosh(beta))

    if a == 0.0:
        # no oscillation: the integrand decays on the real axis itself
        if quad.truncation_B is not None:
            reach = quad.truncation_B
        else:
            reach = truncation_length(bound, quad.abs_tol)
            while b * rho * math.cosh(reach) + bound.rate * reach < target:
                reach += 0.5
        value = adaptive_gauss_kronrod(integrand, 0.0, reach, quad)
    else:
        delta = _contour_height(theta, cfg, bc)
        s = 1.0 if a > 0.0 else -1.0
        reach = 1.0
        while (abs(a) * rho * math.sinh(reach) * math.sin(delta)
               + b * rho * math.cosh(reach) * math.cos(delta)
               + bound.rate * reach) < target:
            reach += 0.25
        corner = 1j * s * delta
        value = integrate_path(integrand, [0.0, corner, corner + reach], quad)
    return 1j / (4.0 * cfg.Phi) * value


def _check_sd_domain(rho: float, theta: float, cfg: WedgeConfig) -> None:
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho!r}")
    if not cfg.exterior_contains(theta):
        raise DomainError(f"theta={theta!r} outside the exterior [phi, 2*pi]")


def S_d(rho: float, theta: float, omega: complex, cfg: WedgeConfig,
        bc: BoundaryKind, quad: QuadratureSpec = _DEFAULT_QUAD) -> complex:
    """Diffracted density for Im omega >= 0, omega != 0."""
    omega = complex(omega)
    _check_sd_domain(rho, theta, cfg)
    if omega.imag < 0.0:
        raise DomainError(f"omega={omega!r} must have Im omega >= 0")
    if omega == 0.0:
        raise DomainError("omega=0: use limiting_amplitude with omega0=0")
    return _sd_integral(rho, theta, omega, cfg, bc, quad)


def S_s(rho: float, theta: float, omega: complex, cfg: WedgeConfig,
        bc: BoundaryKind, quad: QuadratureSpec = _DEFAULT_QUAD) -> complex:
    """Scattered density S_r + S_d."""
    return S_r(rho, theta, omega, cfg, bc) + S_d(rho, theta, omega, cfg, bc, quad)


def limiting_amplitude(rho: float, theta: float, cfg: WedgeConfig,
                       bc: BoundaryKind, a0: complex, omega0: float,
                       quad: QuadratureSpec = _DEFAULT_QUAD) -> complex:
    """Stationary diffracted amplitude a0 * S_d at real frequency omega0.

    omega0 = 0 is allowed and reproduces the long-time limit of the
    unit-step response, a piecewise constant function of theta.
    """
    _check_sd_domain(rho, theta, cfg)
    omega0 = float(omega0)
    return a0 * _sd_integral(rho, theta, complex(omega0), cfg, bc, quad)


def amplitude(rho: float, theta: float, t: float, p: Profile, cfg: WedgeConfig,
              bc: BoundaryKind, quad: QuadratureSpec = _DEFAULT_QUAD) -> complex:
    """Running amplitude A_d(t) = e^{i*omega0*t} * u_d(t) of the diffracted wave."""
    omega0 = profile_carrier(p)
    return cmath.exp(1j * omega0 * t) * diffracted(rho, theta, t, p, cfg, bc, quad)
