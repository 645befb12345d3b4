"""Exception types raised by the wedge-diffraction evaluators."""

from __future__ import annotations


class WedgeWaveError(Exception):
    """Base class for all library-specific errors."""


class WedgeAngleOutOfRangeError(WedgeWaveError, ValueError):
    """Wedge opening angle phi outside the open interval (0, pi)."""


class IncidenceOutOfRangeError(WedgeWaveError, ValueError):
    """Incidence angle alpha violates max(0, phi - pi/2) < alpha < min(pi/2, phi)."""


class DomainError(WedgeWaveError, ValueError):
    """Argument outside the mathematical domain of the requested quantity."""


class DeltaNotPointwiseError(WedgeWaveError):
    """A delta pulse was passed to an evaluator that needs pointwise profile values."""


class NotSupportedError(WedgeWaveError):
    """Requested transform or operation has no implemented closed form."""


class CriticalRayError(WedgeWaveError):
    """Observation angle lies within eps_ray of a critical direction theta_1 or theta_2."""


class PoleHitError(WedgeWaveError):
    """Kernel argument fell within 1e-12 of a pole of coth or csch."""


class WavefrontSingularityError(WedgeWaveError):
    """Impulse response requested within 1e-12*rho of the cylindrical wavefront t = rho."""


class QuadratureFailureError(WedgeWaveError):
    """Adaptive integrator exhausted its subdivision budget before reaching tolerance."""


class BranchViolationError(WedgeWaveError):
    """Principal-branch precondition of a closed-form logarithm failed."""


class NonFiniteSampleError(WedgeWaveError):
    """An integrand or field sample evaluated to nan or inf."""
