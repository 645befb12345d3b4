"""Wedge geometry, admissible incidence, and angular sector classification.

Conventions
-----------
The solid wedge occupies the sector 0 <= theta <= phi of the plane, with
0 < phi < pi.  The exterior (where the field lives) is phi <= theta <= 2*pi,
of opening Phi = 2*pi - phi in (pi, 2*pi).  Face Q1 is the ray theta = 2*pi
(equivalently theta = 0) and face Q2 is the ray theta = phi.

A plane pulse travels in direction n0 = (cos alpha, sin alpha).  The incidence
window max(0, phi - pi/2) < alpha < min(pi/2, phi) guarantees that both faces
are illuminated, so the only discontinuity rays of the geometrical part are
the two mirror directions

    theta_1 = 2*phi - alpha   (reflection off Q2),
    theta_2 = 2*pi - alpha    (reflection off Q1),

which satisfy phi < theta_1 < theta_2 < 2*pi.  The half-order parameter
q = pi / (2*Phi) lies in (1/4, 1/2).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IncidenceOutOfRangeError, WedgeAngleOutOfRangeError

# Angular tolerance for recognizing a point as lying exactly on a face.
_FACE_TOL = 1e-12


class BoundaryKind(enum.Enum):
    """Boundary condition pair on (Q1, Q2).

    DD: Dirichlet on both faces.
    NN: Neumann on both faces.
    DN: Neumann on Q1 (theta = 2*pi), Dirichlet on Q2 (theta = phi).
    """

    DD = "DD"
    NN = "NN"
    DN = "DN"


class SectorKind(enum.Enum):
    REFLECTION_SECTOR_1 = "ReflectionSector1"  # phi < theta < theta_1
    SHADOWED_MIDDLE = "ShadowedMiddle"         # theta_1 < theta < theta_2
    REFLECTION_SECTOR_2 = "ReflectionSector2"  # theta_2 < theta < 2*pi
    CRITICAL_RAY = "CriticalRay"               # within eps_ray of theta_k
    FACE = "Face"                              # on Q1 or Q2
    INSIDE_WEDGE = "InsideWedge"               # 0 < theta < phi


@dataclass(frozen=True)
class Sector:
    """Classification tag; index is k in {1, 2} for CRITICAL_RAY and FACE."""

    kind: SectorKind
    index: int | None = None


@dataclass(frozen=True)
class WedgeConfig:
    """Validated wedge geometry; construct through make_wedge."""

    phi: float
    alpha: float

    @property
    def Phi(self) -> float:
        """Exterior opening 2*pi - phi."""
        return 2.0 * math.pi - self.phi

    @property
    def q(self) -> float:
        """Half-order parameter pi / (2*Phi), in (1/4, 1/2)."""
        return math.pi / (2.0 * self.Phi)

    @property
    def theta1(self) -> float:
        """Mirror direction 2*phi - alpha of the reflection off face Q2."""
        return 2.0 * self.phi - self.alpha

    @property
    def theta2(self) -> float:
        """Mirror direction 2*pi - alpha of the reflection off face Q1."""
        return 2.0 * math.pi - self.alpha

    @property
    def n0(self) -> np.ndarray:
        """Unit propagation direction of the incident pulse."""
        return np.array([math.cos(self.alpha), math.sin(self.alpha)])

    @property
    def n1(self) -> np.ndarray:
        """Unit propagation direction of the wave reflected off Q2."""
        return np.array([math.cos(self.theta1), math.sin(self.theta1)])

    @property
    def n2(self) -> np.ndarray:
        """Unit propagation direction of the wave reflected off Q1."""
        return np.array([math.cos(self.theta2), math.sin(self.theta2)])

    def critical_angles(self) -> tuple[float, float]:
        return (self.theta1, self.theta2)

    def exterior_contains(self, theta: float) -> bool:
        return self.phi <= theta <= 2.0 * math.pi


def make_wedge(phi: float, alpha: float) -> WedgeConfig:
    """Build a WedgeConfig, enforcing the admissibility window.

    Raises WedgeAngleOutOfRangeError unless 0 < phi < pi, and
    IncidenceOutOfRangeError unless max(0, phi - pi/2) < alpha < min(pi/2, phi).
    """
    if not (0.0 < phi < math.pi):
        raise WedgeAngleOutOfRangeError(
            f"wedge angle phi must lie in (0, pi), got {phi!r}"
        )
    lo = max(0.0, phi - 0.5 * math.pi)
    hi = min(0.5 * math.pi, phi)
    if not (lo < alpha < hi):
        raise IncidenceOutOfRangeError(
            f"incidence alpha must lie in ({lo!r}, {hi!r}) for phi={phi!r}, got {alpha!r}"
        )
    return WedgeConfig(phi=float(phi), alpha=float(alpha))


def reference_wedge() -> WedgeConfig:
    """The worked configuration phi = pi/3, alpha = pi/4 (q = 0.3)."""
    return make_wedge(math.pi / 3.0, math.pi / 4.0)


def classify(theta: float, cfg: WedgeConfig, eps_ray: float = 1e-6) -> Sector:
    """Classify an angle in [0, 2*pi] into the sector partition.

    Critical-ray bands |theta - theta_k| <= eps_ray take precedence over the
    open sectors; exact face hits are recognized to _FACE_TOL.
    """
    if not (0.0 <= theta <= 2.0 * math.pi):
        raise DomainError(f"theta must lie in [0, 2*pi], got {theta!r}")
    for k, theta_k in enumerate(cfg.critical_angles(), start=1):
        if abs(theta - theta_k) <= eps_ray:
            return Sector(SectorKind.CRITICAL_RAY, index=k)
    if abs(theta - cfg.phi) <= _FACE_TOL:
        return Sector(SectorKind.FACE, index=2)
    if abs(theta - 2.0 * math.pi) <= _FACE_TOL or theta <= _FACE_TOL:
        return Sector(SectorKind.FACE, index=1)
    if theta < cfg.phi:
        return Sector(SectorKind.INSIDE_WEDGE)
    if theta < cfg.theta1:
        return Sector(SectorKind.REFLECTION_SECTOR_1)
    if theta < cfg.theta2:
        return Sector(SectorKind.SHADOWED_MIDDLE)
    return Sector(SectorKind.REFLECTION_SECTOR_2)
