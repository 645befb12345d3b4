"""Closed-form diffracted wave for a unit-step pulse, and its long-time limits.

For F = Heaviside the diffracted integral collapses to logarithms.  With
b = t/rho + sqrt((t/rho)^2 - 1) (so l = ln b is the integration half-length)
and the angular offsets c_k of the kernel expansion:

DD/NN (coth kernels).  Each term integrates to (1/q) * Log U_k with

    U_k = sinh(q*l + i*c_k) / sinh(-q*l + i*c_k)
        = -e^{2*i*c_k} * (1 - p*e^{-2*i*c_k}) / (1 - p*e^{2*i*c_k}),
    p = b^{-2q},

and the principal branch is exact: along the integration path the argument
sinh(q*beta + i*c_k) keeps Im = cosh(q*beta)*sin(c_k) of one fixed sign, so
the continuous log never leaves (-pi, pi).  Hence

    u_d = (i/2pi) * sum_k s_k * Log U_k .

DN (csch kernels).  The half-angle antiderivative ln tanh((q*beta + i*c)/2)
gives, again exactly on the principal branch,

    u_d = (i/2pi) * sum_k s_k * [Log W+_k - Log W-_k],
    W+_k = (b^q e^{i c_k} - 1) / (b^q e^{i c_k} + 1),
    W-_k = -(b^q e^{-i c_k} - 1) / (b^q e^{-i c_k} + 1),

where W-_k = -conj(W+_k), so the result is real.  The classical product
form of these logs is branch-fragile; this factorization is the one that
matches the defining integral to rounding for every t > rho.

As t -> infinity, U_k -> -e^{2*i*c_k} and each coth term contributes the
piecewise-linear I_of(c_k); each csch term contributes sign(c_k)/2.  Summed
against s_k the theta-dependence cancels and the limits are sector-wise
constants; see longtime_limit.

The module also evaluates the classical angular-spectrum total-field formula
(Petrashen form) for the DD case and the map identifying it with ours, used
as an independent cross-check.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import BranchViolationError, CriticalRayError, DomainError
from .geometry import BoundaryKind, WedgeConfig
from .kernels import c_offsets, kernel_terms

_TWO_PI = 2.0 * math.pi


def b_of(t_over_rho: float) -> float:
    """b = lambda + sqrt(lambda^2 - 1) for lambda = t/rho >= 1."""
    lam = float(t_over_rho)
    if lam < 1.0:
        raise DomainError(f"b_of needs t/rho >= 1, got {lam!r}")
    return lam + math.sqrt(lam * lam - 1.0)


def l_of(lam: float) -> float:
    """Integration half-length: ln(lambda + sqrt(lambda^2 - 1)) for lambda > 1, else 0."""
    lam = float(lam)
    if lam <= 0.0:
        raise DomainError(f"l_of needs lambda > 0, got {lam!r}")
    if lam <= 1.0:
        return 0.0
    return math.log(lam + math.sqrt(lam * lam - 1.0))


def _validate_angle(rho: float, theta: float, cfg: WedgeConfig, eps_ray: float) -> None:
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho!r}")
    if not cfg.exterior_contains(theta):
        raise DomainError(f"theta={theta!r} outside the exterior [phi, 2*pi]")
    for theta_k in cfg.critical_angles():
        if abs(theta - theta_k) <= eps_ray:
            raise CriticalRayError(
                f"theta={theta!r} within {eps_ray!r} of critical direction {theta_k!r}"
            )


def heaviside_diffracted(rho: float, theta: float, t: float, cfg: WedgeConfig,
                         bc: BoundaryKind, eps_ray: float = 1e-6) -> float:
    """Closed-form u_d(rho, theta, t) for a unit-step pulse; 0 for t <= rho."""
    _validate_angle(rho, theta, cfg, eps_ray)
    if t <= rho:
        return 0.0
    bq = b_of(t / rho) ** cfg.q
    c = c_offsets(theta, cfg, bc)
    terms = kernel_terms(cfg, bc)
    total = 0.0 + 0.0j
    if terms.kind == "coth":
        ql = cfg.q * math.log(b_of(t / rho))
        for s_k, c_k in zip(terms.signs, c):
            num = cmath.sinh(ql + 1j * c_k)
            den = cmath.sinh(-ql + 1j * c_k)
            # both have Im = cosh(ql)*sin(c_k); a sign flip would mean the
            # continuous log left the principal strip
            if num.imag * den.imag < 0.0:
                raise BranchViolationError(
                    f"sinh-ratio branch condition failed at c={c_k!r}"
                )
            total += s_k * cmath.log(num / den)
    else:
        for s_k, c_k in zip(terms.signs, c):
            x = bq * cmath.exp(1j * c_k)
            y = bq * cmath.exp(-1j * c_k)
            # remark condition: arg((x+1)/(x-1)) - arg((y+1)/(y-1)) in (-pi,pi),
            # equivalent to Re((x+1)/(x-1)) > 0, automatic for b > 1
            if (((x + 1.0) / (x - 1.0)).real <= 0.0):
                raise BranchViolationError(
                    f"half-angle branch condition failed at c={c_k!r}"
                )
            total += s_k * (cmath.log((x - 1.0) / (x + 1.0))
                            - cmath.log(-(y - 1.0) / (y + 1.0)))
    return (1j / _TWO_PI * total).real


def I_of(c: float) -> float:
    """Long-time limit of one coth term: -c/pi + 1/2 on (0,pi), -c/pi - 1/2 on (-pi,0)."""
    c = float(c)
    if c == 0.0 or abs(c) >= math.pi:
        raise DomainError(f"I_of needs 0 < |c| < pi, got {c!r}")
    return -c / math.pi + math.copysign(0.5, c)


def longtime_limit(theta: float, cfg: WedgeConfig, bc: BoundaryKind,
                   C: complex = 1.0, eps_ray: float = 1e-6) -> complex:
    """t -> infinity limit of the diffracted wave for pulse amplitude C.

    Assembled term-by-term, which reproduces the sector tables: DD gives
    (0, -1, 0) on the three sectors, NN gives 2*pi/Phi + (-2, -1, -2),
    DN gives (0, -1, -2).
    """
    _validate_angle(1.0, theta, cfg, eps_ray)
    c = c_offsets(theta, cfg, bc)
    terms = kernel_terms(cfg, bc)
    if terms.kind == "coth":
        base = sum(s_k * I_of(c_k) for s_k, c_k in zip(terms.signs, c))
    else:
        base = sum(s_k * math.copysign(0.5, c_k) for s_k, c_k in zip(terms.signs, c))
    return C * base


def total_longtime_limit(cfg: WedgeConfig, bc: BoundaryKind) -> float:
    """t -> infinity limit of the total field: 2*pi/Phi for NN, 0 for DD and DN."""
    if bc is BoundaryKind.NN:
        return _TWO_PI / cfg.Phi
    return 0.0


# ---------------------------------------------------------------------------
# Classical DD total-field formula in Petrashen variables, as a cross-check.
# The angle vp = theta - phi is measured from face Q2, vp_0 = alpha - pi + a1
# with a1 = Phi, and tau = rho/t in (0, 1).  The critical directions map to
# vp_1 = pi - vp_0 and vp_2 = a1 - alpha = 2*a1 - pi - vp_0.


def _petrashen_angles(cfg: WedgeConfig) -> tuple[float, float, float, float]:
    a1 = cfg.Phi
    vp0 = cfg.alpha - math.pi + a1
    vp1 = math.pi - vp0
    vp2 = 2.0 * a1 - math.pi - vp0
    return a1, vp0, vp1, vp2


def _validate_petrashen(varphi: float, tau: float, cfg: WedgeConfig,
                        eps_ray: float, *,
                        pre_front: bool) -> tuple[float, float, float, float]:
    a1, vp0, vp1, vp2 = _petrashen_angles(cfg)
    if not (0.0 < varphi < a1):
        raise DomainError(f"varphi={varphi!r} outside (0, {a1!r})")
    if pre_front and not (0.0 < tau < 1.0):
        raise DomainError(f"tau={tau!r} outside (0, 1)")
    if not pre_front and not tau > 0.0:
        raise DomainError(f"tau={tau!r} must be positive")
    for vpk in (vp1, vp2):
        if abs(varphi - vpk) <= eps_ray:
            raise CriticalRayError(
                f"varphi={varphi!r} within {eps_ray!r} of critical angle {vpk!r}"
            )
    return a1, vp0, vp1, vp2


def sobolev_U(varphi: float, tau: float, cfg: WedgeConfig,
              eps_ray: float = 1e-6) -> complex:
    """Classical two-log total-field formula U(varphi, tau) for the DD wedge.

    Evaluates the pair of assembled four-factor ratios with principal logs
    and p = b^{-2q}, b = 1/tau + sqrt(1/tau^2 - 1).  The display is only
    branch-safe while each assembled log's factor arguments sum inside
    (-pi, pi); that holds for all angles once tau is below roughly 0.93, and
    BranchViolationError is raised where it fails (a genuine limitation of
    the classical form near the wavefront, not a numerical artifact).
    """
    a1, vp0, _, _ = _validate_petrashen(varphi, tau, cfg, eps_ray,
                                        pre_front=True)
    inv = 1.0 / tau
    p = (inv + math.sqrt(inv * inv - 1.0)) ** (-2.0 * cfg.q)
    scale = math.pi / a1

    def factor_arg(x: float) -> complex:
        return 1.0 - p * cmath.exp(1j * scale * x)

    def assembled_log(plus: float, minus: float) -> complex:
        num1, num2 = factor_arg(-plus), factor_arg(minus)
        den1, den2 = factor_arg(plus), factor_arg(-minus)
        arg_sum = (cmath.phase(num1) + cmath.phase(num2)
                   - cmath.phase(den1) - cmath.phase(den2))
        if abs(arg_sum) >= math.pi:
            raise BranchViolationError(
                "assembled principal log leaves (-pi, pi); the classical "
                f"display is invalid at varphi={varphi!r}, tau={tau!r}"
            )
        return cmath.log(num1 * num2 / (den1 * den2))

    log1 = assembled_log(varphi - vp0 + math.pi, varphi - vp0 - math.pi)
    log2 = assembled_log(-varphi - vp0 + math.pi, -varphi - vp0 - math.pi)
    return (log1 - log2) / (2j * math.pi)


def sobolev_total_from_ours(varphi: float, tau: float, cfg: WedgeConfig,
                            eps_ray: float = 1e-6) -> complex:
    """Total DD field assembled from our closed form, in Petrashen variables.

    For tau in (0, 1) the incident step is already 1 everywhere and the
    reflected step cancels it outside (vp_1, vp_2), so the total is u_d plus
    an indicator of that band.  tau >= 1 is allowed and simply has no
    diffracted contribution (the observer is ahead of the cylindrical front).
    """
    _, _, vp1, vp2 = _validate_petrashen(varphi, tau, cfg, eps_ray,
                                         pre_front=False)
    theta = varphi + cfg.phi
    u_d = heaviside_diffracted(1.0, theta, 1.0 / tau, cfg, BoundaryKind.DD,
                               eps_ray=eps_ray)
    return u_d + (1.0 if vp1 < varphi < vp2 else 0.0)
