"""Incident pulse profiles F(s) and their half-line Fourier-Laplace transforms.

Every profile is causal: F(s) = 0 for s < 0.  The transform convention is

    Fhat(omega) = int_0^inf exp(i*omega*s) F(s) ds,   Im omega > 0,

so a unit step transforms to i/omega and a unit impulse to 1.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .errors import DeltaNotPointwiseError, DomainError, NotSupportedError


@dataclass(frozen=True)
class Heaviside:
    """Unit step, with F(0) := 1."""


@dataclass(frozen=True)
class Delta:
    """Unit impulse.  Symbolic only: pointwise evaluation is an error."""


@dataclass(frozen=True)
class SmoothRamp:
    """C-infinity ramp rising from 0 to 1 over [0, s0].

    Uses the standard bump-quotient g(x) = B(x) / (B(x) + B(1 - x)) with
    B(x) = exp(-1/x) for x > 0, so all derivatives vanish at both ends.
    """

    s0: float = 1.0

    def __post_init__(self) -> None:
        if not self.s0 > 0.0:
            raise DomainError(f"ramp length s0 must be positive, got {self.s0!r}")


@dataclass(frozen=True)
class HarmonicSwitched:
    """Switched-on harmonic a0 * exp(-i*omega0*s), gated by a step or a ramp."""

    a0: complex = 1.0
    omega0: float = 1.0
    ramp: SmoothRamp | None = None


@dataclass(frozen=True)
class Tabulated:
    """Sampled profile: linear interpolation on [times[0], times[-1]].

    Beyond the last sample the profile follows the algebraic tail
    values[-1] * ((1 + times[-1]) / (1 + s)) ** decay_p; before the first
    sample (and for all s < 0) it is zero.  times must be strictly
    increasing and nonnegative.
    """

    times: np.ndarray
    values: np.ndarray
    decay_p: float = 0.0

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values)
        values = values.astype(complex) if np.iscomplexobj(values) else values.astype(float)
        if times.ndim != 1 or times.size < 2:
            raise DomainError("Tabulated needs at least two samples")
        if values.shape != times.shape:
            raise DomainError("times and values must have matching shapes")
        if times[0] < 0.0:
            raise DomainError("Tabulated samples must start at times[0] >= 0")
        if not np.all(np.diff(times) > 0.0):
            raise DomainError("times must be strictly increasing")
        if self.decay_p < 0.0:
            raise DomainError("decay_p must be nonnegative")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_csv(cls, path: str, decay_p: float = 0.0) -> "Tabulated":
        """Load (time, value) or (time, re, im) rows; '#' lines and a header row are skipped."""
        times: list[float] = []
        vals: list[complex] = []
        with open(path, newline="") as fh:
            for row in csv.reader(fh):
                if not row or row[0].lstrip().startswith("#"):
                    continue
                try:
                    cells = [float(c) for c in row]
                except ValueError:
                    continue  # header row
                if len(cells) == 2:
                    times.append(cells[0])
                    vals.append(cells[1])
                elif len(cells) == 3:
                    times.append(cells[0])
                    vals.append(complex(cells[1], cells[2]))
                else:
                    raise DomainError(f"expected 2 or 3 columns, got {len(cells)} in {path}")
        values = np.asarray(vals)
        if np.all(np.isreal(values)):
            values = values.real
        return cls(times=np.asarray(times), values=values, decay_p=decay_p)


Profile = Heaviside | Delta | SmoothRamp | HarmonicSwitched | Tabulated


def _bump(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x, dtype=float)
    pos = x > 0.0
    out[pos] = np.exp(-1.0 / x[pos])
    return out


def _ramp_values(s: np.ndarray, s0: float) -> np.ndarray:
    x = np.clip(s / s0, 0.0, 1.0)
    num = _bump(x)
    den = num + _bump(1.0 - x)
    # den >= B(1/2) > 0 on (0, 1); endpoints are exact 0 and 1 via the clip
    out = np.zeros_like(x)
    inner = (x > 0.0) & (x < 1.0)
    out[inner] = num[inner] / den[inner]
    out[x >= 1.0] = 1.0
    return out


def eval_profile(p: Profile, s):
    """Evaluate F(s); vectorized over s.  Delta raises DeltaNotPointwiseError."""
    if isinstance(p, Delta):
        raise DeltaNotPointwiseError("delta pulse has no pointwise values")
    s_arr = np.asarray(s, dtype=float)
    if isinstance(p, Heaviside):
        out = np.where(s_arr >= 0.0, 1.0, 0.0)
    elif isinstance(p, SmoothRamp):
        out = _ramp_values(s_arr, p.s0)
    elif isinstance(p, HarmonicSwitched):
        gate = _ramp_values(s_arr, p.ramp.s0) if p.ramp is not None \
            else np.where(s_arr >= 0.0, 1.0, 0.0)
        out = p.a0 * np.exp(-1j * p.omega0 * s_arr) * gate
    elif isinstance(p, Tabulated):
        t, v = p.times, p.values
        if np.iscomplexobj(v):
            out = np.interp(s_arr, t, v.real) + 1j * np.interp(s_arr, t, v.imag)
        else:
            out = np.interp(s_arr, t, v).astype(float)
        out = np.where(s_arr < t[0], 0.0, out)
        tail = s_arr > t[-1]
        if np.any(tail):
            decay = ((1.0 + t[-1]) / (1.0 + s_arr[tail])) ** p.decay_p
            out = out.astype(v.dtype if np.iscomplexobj(v) else float)
            out[tail] = v[-1] * decay
    else:
        raise TypeError(f"unknown profile {p!r}")
    return out if np.ndim(s) else out[()]


def profile_carrier(p: Profile) -> float:
    """Carrier frequency omega0 of a switched harmonic; 0 for all other profiles."""
    return p.omega0 if isinstance(p, HarmonicSwitched) else 0.0


def _int_exp(z: np.ndarray) -> np.ndarray:
    """int_0^1 exp(z*u) du = (exp(z) - 1) / z, stable near z = 0."""
    small = np.abs(z) < 1e-5
    zs = np.where(small, 1.0, z)
    return np.where(small, 1.0 + z / 2.0 + z * z / 6.0, (np.exp(zs) - 1.0) / zs)


def _int_u_exp(z: np.ndarray) -> np.ndarray:
    """int_0^1 u*exp(z*u) du = (exp(z)*(z - 1) + 1) / z**2, stable near z = 0."""
    small = np.abs(z) < 1e-4
    zs = np.where(small, 1.0, z)
    return np.where(small, 0.5 + z / 3.0 + z * z / 8.0,
                    (np.exp(zs) * (zs - 1.0) + 1.0) / (zs * zs))


def fourier_laplace(p: Profile, omega: complex) -> complex:
    """Half-line transform int_0^inf exp(i*omega*s) F(s) ds for Im omega > 0.

    Closed forms: Heaviside -> i/omega, Delta -> 1, unramped HarmonicSwitched
    -> i*a0/(omega - omega0).  Tabulated profiles integrate each linear
    segment exactly and append the algebraic tail numerically.  SmoothRamp
    (and ramped harmonics) have no implemented transform.
    """
    omega = complex(omega)
    if omega.imag <= 0.0:
        raise DomainError(f"transform requires Im omega > 0, got {omega!r}")
    if isinstance(p, Heaviside):
        return 1j / omega
    if isinstance(p, Delta):
        return 1.0 + 0.0j
    if isinstance(p, HarmonicSwitched):
        if p.ramp is not None:
            raise NotSupportedError("no closed-form transform for a ramped harmonic")
        return 1j * p.a0 / (omega - p.omega0)
    if isinstance(p, Tabulated):
        t, v = p.times, p.values.astype(complex)
        dt = np.diff(t)
        z = 1j * omega * dt
        seg = np.exp(1j * omega * t[:-1]) * dt * (v[:-1] * _int_exp(z)
                                                  + np.diff(v) * _int_u_exp(z))
        total = complex(np.sum(seg))
        if v[-1] != 0.0:
            total += _tabulated_tail_transform(p, omega)
        return total
    raise NotSupportedError(f"no closed-form transform for {type(p).__name__}")


def _tabulated_tail_transform(p: Tabulated, omega: complex) -> complex:
    """Transform of the algebraic tail, by trapezoid on an exp(-Im omega * s) window."""
    t_max = float(p.times[-1])
    span = 40.0 / omega.imag
    s = np.linspace(t_max, t_max + span, 20001)
    f = p.values[-1] * ((1.0 + t_max) / (1.0 + s)) ** p.decay_p * np.exp(1j * omega * s)
    return complex(np.trapezoid(f, s))
