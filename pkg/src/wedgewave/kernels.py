"""Angular kernels of the diffracted-wave integral.

The diffracted part of the field is a contour integral over the real variable
beta of Z(beta + i*theta) against retarded profile values.  Z is assembled
from a face kernel H by

    Z(w) = -H(w - i*pi/2) + H(w - 5*i*pi/2),

where, with q = pi/(2*Phi) and incidence alpha,

    H(w) = coth(q*(w + i*pi/2 - i*alpha)) -/+ coth(q*(w - 3*i*pi/2 + i*alpha))

for DD (minus) and NN (plus), and

    H(w) = csch(q*(w + i*pi/2 - i*alpha)) + csch(q*(w - 3*i*pi/2 + i*alpha))

for DN.  Using the i*pi periodicity of coth (antiperiodicity of csch), Z
collapses to a four-term expansion over the source and mirror directions
p = (alpha, theta_1, theta_2, 2*pi + alpha):

    Z(w) = sum_k s_k * kind(q*(w - i*p_k)),      kind = coth or csch,

with sign patterns s = (-1, -1, +1, +1) for DD, (-1, +1, -1, +1) for NN and
(-1, -1, -1, +1) for DN.  On the line w = beta + i*theta the k-th argument is
q*beta + i*c_k with angular offset c_k = q*(theta - p_k); the offsets satisfy
c_0 in (0, pi), c_3 in (-pi, 0), and c_1, c_2 in (-pi/2, pi/2) vanishing
exactly on the critical rays theta = theta_1, theta_2.

Poles of Z(. + i*theta) sit on the imaginary axis at beta = i*(m*pi - c_k)/q;
a real-beta pole therefore occurs only on the critical rays.  Away from them
|Z(beta + i*theta)| <= C(theta) * exp(-rate*|beta|) with rate = 2*q for the
coth kernels and rate = q for csch; the constant factors are fitted by
decay_bound.  Both coth and csch are evaluated in scaled form for large
|Re| so that this decay survives in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CriticalRayError, PoleHitError
from .geometry import BoundaryKind, WedgeConfig

# sign patterns of the four-term expansion, in the order (alpha, theta1, theta2, 2pi+alpha)
_SIGNS = {
    BoundaryKind.DD: (-1.0, -1.0, 1.0, 1.0),
    BoundaryKind.NN: (-1.0, 1.0, -1.0, 1.0),
    BoundaryKind.DN: (-1.0, -1.0, -1.0, 1.0),
}

_POLE_TOL_SQ = 1e-24  # squared distance from a kernel argument to the lattice i*pi*Z


@dataclass(frozen=True)
class KernelTermSet:
    """Expansion data: angles p_k, signs s_k, hyperbolic kind, and q."""

    q: float
    kind: str                     # "coth" or "csch"
    angles: tuple[float, float, float, float]
    signs: tuple[float, float, float, float]


@dataclass(frozen=True)
class DecayBound:
    """Envelope |Z(beta + i*theta)| <= C * exp(-rate * |beta|) for real beta."""

    C: float
    rate: float


def kernel_terms(cfg: WedgeConfig, bc: BoundaryKind) -> KernelTermSet:
    kind = "csch" if bc is BoundaryKind.DN else "coth"
    angles = (cfg.alpha, cfg.theta1, cfg.theta2, 2.0 * math.pi + cfg.alpha)
    return KernelTermSet(q=cfg.q, kind=kind, angles=angles, signs=_SIGNS[bc])


def c_offsets(theta, cfg: WedgeConfig, bc: BoundaryKind = BoundaryKind.DD) -> np.ndarray:
    """Angular offsets c_k = q*(theta - p_k), stacked along the last axis."""
    terms = kernel_terms(cfg, bc)
    theta = np.asarray(theta, dtype=float)
    return terms.q * (theta[..., None] - np.asarray(terms.angles))


def _check_poles(z: np.ndarray) -> None:
    im = z.imag
    d_sq = z.real ** 2 + (im - math.pi * np.round(im / math.pi)) ** 2
    if np.any(d_sq < _POLE_TOL_SQ):
        raise PoleHitError("kernel argument within 1e-12 of a pole of coth/csch")


def _coth_parts(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """coth(z) split as sigma + D with integer plateau sigma and decaying D.

    The split keeps the exponentially small remainder D representable when
    several coth terms with cancelling plateaus are summed.
    """
    x = z.real
    sigma = np.where(x > 0.5, 1.0, np.where(x < -0.5, -1.0, 0.0))
    D = np.empty_like(z)
    mid = np.abs(x) <= 0.5
    pos = x > 0.5
    neg = x < -0.5
    D[mid] = 1.0 / np.tanh(z[mid])
    w = np.exp(-2.0 * z[pos])
    D[pos] = 2.0 * w / (1.0 - w)
    v = np.exp(2.0 * z[neg])
    D[neg] = -2.0 * v / (1.0 - v)
    return sigma, D


def _csch(z: np.ndarray) -> np.ndarray:
    x = z.real
    out = np.empty_like(z)
    mid = np.abs(x) <= 0.5
    pos = x > 0.5
    neg = x < -0.5
    out[mid] = 1.0 / np.sinh(z[mid])
    w = np.exp(-z[pos])
    out[pos] = 2.0 * w / (1.0 - w * w)
    v = np.exp(z[neg])
    out[neg] = -2.0 * v / (1.0 - v * v)
    return out


def _signed_sum(z: np.ndarray, signs: np.ndarray, kind: str) -> np.ndarray:
    """sum_k s_k * kind(z_k) over the last axis, with plateau cancellation."""
    _check_poles(z)
    if kind == "coth":
        sigma, D = _coth_parts(z)
        # plateau part is exact integer arithmetic; it vanishes identically
        # whenever all terms share a plateau and the signs sum to zero
        return np.sum(signs * sigma, axis=-1) + np.sum(signs * D, axis=-1)
    return np.sum(signs * _csch(z), axis=-1)


def H_kernel(beta, cfg: WedgeConfig, bc: BoundaryKind):
    """Face kernel H(beta); beta may be complex and array-valued."""
    beta = np.asarray(beta, dtype=complex)
    q = cfg.q
    a = np.stack([
        q * (beta + 1j * (0.5 * math.pi - cfg.alpha)),
        q * (beta - 1j * (1.5 * math.pi - cfg.alpha)),
    ], axis=-1)
    if bc is BoundaryKind.DD:
        signs = np.array([1.0, -1.0])
    else:
        signs = np.array([1.0, 1.0])
    kind = "csch" if bc is BoundaryKind.DN else "coth"
    out = _signed_sum(a, signs, kind)
    return out if beta.ndim else complex(out)


def Z_from_H(beta, cfg: WedgeConfig, bc: BoundaryKind):
    """Composition route Z(beta) = -H(beta - i*pi/2) + H(beta - 5*i*pi/2)."""
    beta = np.asarray(beta, dtype=complex)
    return -H_kernel(beta - 0.5j * math.pi, cfg, bc) \
        + H_kernel(beta - 2.5j * math.pi, cfg, bc)


def Z_kernel(beta, cfg: WedgeConfig, bc: BoundaryKind):
    """Four-term expansion of Z(beta); beta may be complex and array-valued."""
    beta = np.asarray(beta, dtype=complex)
    terms = kernel_terms(cfg, bc)
    z = terms.q * (beta[..., None] - 1j * np.asarray(terms.angles))
    out = _signed_sum(z, np.asarray(terms.signs), terms.kind)
    return out if beta.ndim else complex(out)


def folded_Z(beta, theta: float, cfg: WedgeConfig, bc: BoundaryKind,
             eps_ray: float = 1e-6):
    """Even folding Z(beta + i*theta) + Z(-beta + i*theta) used on half-line contours."""
    for theta_k in cfg.critical_angles():
        if abs(theta - theta_k) <= eps_ray:
            raise CriticalRayError(
                f"theta={theta!r} within {eps_ray!r} of critical direction {theta_k!r}"
            )
    beta = np.asarray(beta, dtype=complex)
    return Z_kernel(beta + 1j * theta, cfg, bc) + Z_kernel(-beta + 1j * theta, cfg, bc)


def decay_rate(cfg: WedgeConfig, bc: BoundaryKind) -> float:
    return cfg.q if bc is BoundaryKind.DN else 2.0 * cfg.q


def decay_bound(cfg: WedgeConfig, bc: BoundaryKind, theta: float) -> DecayBound:
    """Fit the envelope constant on a log-spaced |beta| grid and validate it.

    The fit covers 1 <= |beta| <= 50 on both half-lines; the returned C keeps
    a 1.2 margin over the densified maximum of |Z| * exp(rate*|beta|).
    """
    rate = decay_rate(cfg, bc)
    grid = np.geomspace(1.0, 50.0, 97)
    fine = np.geomspace(1.0, 50.0, 389)
    C = 0.0
    for sample in (grid, fine):
        beta = np.concatenate([sample, -sample])
        vals = np.abs(Z_kernel(beta + 1j * theta, cfg, bc))
        C = max(C, float(np.max(vals * np.exp(rate * np.abs(beta)))))
    return DecayBound(C=1.2 * C, rate=rate)
