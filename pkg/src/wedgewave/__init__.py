"""Exact time-domain and stationary fields for plane-pulse diffraction by a
two-dimensional wedge with Dirichlet/Neumann faces.

The package evaluates the incident, reflected and edge-diffracted parts of
the field for a plane pulse F(t - n0.y) hitting a wedge of opening angle
phi, for the three face-condition combinations DD, NN and DN.  The
diffracted wave comes from a Sommerfeld-type contour integral of a
meromorphic kernel; closed forms are available for the unit-step pulse,
long times, and the stationary (fixed-frequency) regime.
"""

from .errors import (
    BranchViolationError,
    CriticalRayError,
    DeltaNotPointwiseError,
    DomainError,
    IncidenceOutOfRangeError,
    NonFiniteSampleError,
    NotSupportedError,
    PoleHitError,
    QuadratureFailureError,
    WavefrontSingularityError,
    WedgeAngleOutOfRangeError,
    WedgeWaveError,
)
from .geometry import (
    BoundaryKind,
    Sector,
    SectorKind,
    WedgeConfig,
    classify,
    make_wedge,
    reference_wedge,
)
from .heaviside import (
    I_of,
    b_of,
    heaviside_diffracted,
    l_of,
    longtime_limit,
    sobolev_U,
    sobolev_total_from_ours,
    total_longtime_limit,
)
from .kernels import (
    DecayBound,
    H_kernel,
    KernelTermSet,
    Z_from_H,
    Z_kernel,
    c_offsets,
    decay_bound,
    decay_rate,
    folded_Z,
    kernel_terms,
)
from .profiles import (
    Delta,
    HarmonicSwitched,
    Heaviside,
    Profile,
    SmoothRamp,
    Tabulated,
    eval_profile,
    fourier_laplace,
    profile_carrier,
)
from .quadrature import (
    QuadratureSpec,
    adaptive_gauss_kronrod,
    integrate_path,
    truncation_length,
)
from .spectral import S_d, S_r, S_s, amplitude, limiting_amplitude
from .timedomain import (
    FieldSample,
    ImpulseDescriptor,
    diffracted,
    diffracted_delta,
    incident,
    jump,
    reflected,
    reflected_delta,
    total,
)
from .validation import (
    BoundaryReport,
    StationaryMode,
    TimeDomainMode,
    boundary_report,
    helmholtz_residual,
    oracle_quadrature,
    wave_residual,
)

__version__ = "0.1.0"
