"""Batch command-line front end.

Scenarios are described by a TOML config with sections [wedge], [bc],
[profile], [grid], [quadrature] plus per-subcommand extras; angles are
accepted as radians or as rational multiples of pi ("pi/3", "3*pi/4").
Output tables use 17-significant-digit floats, '.' decimals, comma
delimiters and LF line endings, so identical configs give byte-identical
files.  WEDGEWAVE_THREADS caps grid parallelism.

Exit codes: 0 success, 1 usage/config error, 2 validation failure.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import spectral, timedomain, validation
from .errors import WedgeWaveError
from .geometry import BoundaryKind, WedgeConfig, make_wedge
from .heaviside import longtime_limit, total_longtime_limit, sobolev_U, \
    sobolev_total_from_ours, _petrashen_angles
from .profiles import (
    Delta,
    HarmonicSwitched,
    Heaviside,
    Profile,
    SmoothRamp,
    Tabulated,
)
from .quadrature import QuadratureSpec


class UsageError(Exception):
    """Bad flags or config; carries a message naming the offending key."""


_ANGLE_RE = re.compile(
    r"^\s*([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?\s*$")


def parse_angle(value, key: str) -> float:
    """Radians from a float or a 'pi/3'-style string."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if isinstance(value, str):
        m = _ANGLE_RE.match(value)
        if m:
            coef_s, den_s = m.groups()
            coef = 1.0 if coef_s in ("", "+") else -1.0 if coef_s == "-" \
                else float(coef_s)
            den = float(den_s) if den_s else 1.0
            return coef * math.pi / den
        try:
            return float(value)
        except ValueError:
            pass
    raise UsageError(f"{key}: expected a number or a multiple of pi, got {value!r}")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _check_keys(section: dict, allowed: set[str], prefix: str) -> None:
    for k in section:
        if k not in allowed:
            raise UsageError(f"{prefix}.{k}: unknown key")


def _load_config(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except FileNotFoundError:
        raise UsageError(f"config file not found: {path}")
    except tomllib.TOMLDecodeError as exc:
        raise UsageError(f"config parse error in {path}: {exc}")


def _wedge_from(config: dict) -> WedgeConfig:
    sec = config.get("wedge")
    if not isinstance(sec, dict):
        raise UsageError("wedge: section missing")
    _check_keys(sec, {"phi", "alpha"}, "wedge")
    if "phi" not in sec or "alpha" not in sec:
        raise UsageError("wedge.phi and wedge.alpha are required")
    return make_wedge(parse_angle(sec["phi"], "wedge.phi"),
                      parse_angle(sec["alpha"], "wedge.alpha"))


def _bc_from(config: dict) -> BoundaryKind:
    sec = config.get("bc", {})
    _check_keys(sec, {"kind"}, "bc")
    kind = sec.get("kind", "DD")
    try:
        return BoundaryKind[str(kind).upper()]
    except KeyError:
        raise UsageError(f"bc.kind: expected DD, NN or DN, got {kind!r}")


def _profile_from(config: dict) -> Profile:
    sec = config.get("profile", {})
    kind = sec.get("kind", "heaviside")
    if kind == "heaviside":
        _check_keys(sec, {"kind"}, "profile")
        return Heaviside()
    if kind == "delta":
        _check_keys(sec, {"kind"}, "profile")
        return Delta()
    if kind == "smooth_ramp":
        _check_keys(sec, {"kind", "s0"}, "profile")
        return SmoothRamp(float(sec.get("s0", 1.0)))
    if kind == "harmonic":
        _check_keys(sec, {"kind", "a0", "omega0", "ramp_s0"}, "profile")
        ramp = SmoothRamp(float(sec["ramp_s0"])) if "ramp_s0" in sec else None
        return HarmonicSwitched(a0=complex(sec.get("a0", 1.0)),
                                omega0=float(sec.get("omega0", 1.0)),
                                ramp=ramp)
    if kind == "tabulated":
        _check_keys(sec, {"kind", "path", "decay_p"}, "profile")
        if "path" not in sec:
            raise UsageError("profile.path: required for tabulated profiles")
        return Tabulated.from_csv(sec["path"],
                                  decay_p=float(sec.get("decay_p", 0.0)))
    raise UsageError(f"profile.kind: unknown kind {kind!r}")


def _quad_from(config: dict) -> QuadratureSpec:
    sec = config.get("quadrature", {})
    allowed = {"rel_tol", "abs_tol", "max_subdivisions", "truncation_B",
               "eps_ray"}
    _check_keys(sec, allowed, "quadrature")
    kwargs = {k: (int(v) if k == "max_subdivisions" else float(v))
              for k, v in sec.items()}
    try:
        return QuadratureSpec(**kwargs)
    except WedgeWaveError as exc:
        raise UsageError(f"quadrature: {exc}")


def _axis_from(spec, key: str, angle: bool = False) -> list[float]:
    def _plain(v):
        try:
            return float(v)
        except (TypeError, ValueError):
            raise UsageError(f"{key}: expected a number, got {v!r}")

    parse = (lambda v: parse_angle(v, key)) if angle else _plain
    if isinstance(spec, list):
        if not spec:
            raise UsageError(f"{key}: empty axis")
        return [parse(v) for v in spec]
    if isinstance(spec, dict):
        extra = set(spec) - {"start", "stop", "count"}
        if extra:
            raise UsageError(f"{key}.{sorted(extra)[0]}: unknown key")
        try:
            start, stop = parse(spec["start"]), parse(spec["stop"])
            count = int(spec["count"])
        except KeyError as exc:
            raise UsageError(f"{key}.{exc.args[0]}: required")
        if count < 1:
            raise UsageError(f"{key}.count: must be >= 1")
        if count == 1:
            return [start]
        step = (stop - start) / (count - 1)
        return [start + i * step for i in range(count)]
    raise UsageError(f"{key}: expected a list or {{start, stop, count}}")


def _grid_from(config: dict, axes: tuple[str, ...]) -> dict[str, list[float]]:
    sec = config.get("grid")
    if not isinstance(sec, dict):
        raise UsageError("grid: section missing")
    _check_keys(sec, {"rho", "theta", "t"}, "grid")
    out = {}
    for name in axes:
        if name not in sec:
            raise UsageError(f"grid.{name}: required for this subcommand")
        out[name] = _axis_from(sec[name], f"grid.{name}", angle=(name == "theta"))
    return out


def _n_threads() -> int:
    cap = os.environ.get("WEDGEWAVE_THREADS")
    n = os.cpu_count() or 1
    if cap is not None:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise UsageError(f"WEDGEWAVE_THREADS: expected an integer, got {cap!r}")
    return n


def _map_ordered(fn, items):
    n = _n_threads()
    if n <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _write_lines(path: str | None, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _cmd_field(args) -> int:
    config = _load_config(args.config)
    cfg = _wedge_from(config)
    bc = _bc_from(config)
    p = _profile_from(config)
    if isinstance(p, Delta):
        raise UsageError(
            "profile.kind: delta has no pointwise field; "
            "use a pointwise profile or the impulse descriptors")
    quad = _quad_from(config)
    grid = _grid_from(config, ("rho", "theta", "t"))
    points = [(r, th, t) for r in grid["rho"] for th in grid["theta"]
              for t in grid["t"]]

    def row(point):
        r, th, t = point
        s = timedomain.total(r, th, t, p, cfg, bc, quad)
        return ",".join(_fmt(v) for v in (
            s.rho, s.theta, s.t,
            s.u_in.real, s.u_in.imag,
            s.u_r.real, s.u_r.imag,
            s.u_d.real, s.u_d.imag,
            s.u_total.real, s.u_total.imag,
        ))

    header = "rho,theta,t,re_uin,im_uin,re_ur,im_ur,re_ud,im_ud,re_u,im_u"
    _write_lines(args.out, [header] + _map_ordered(row, points))
    return 0


def _cmd_limits(args) -> int:
    config = _load_config(args.config)
    cfg = _wedge_from(config)
    bc = _bc_from(config)
    mids = (
        ("sector1", 0.5 * (cfg.phi + cfg.theta1)),
        ("middle", 0.5 * (cfg.theta1 + cfg.theta2)),
        ("sector2", 0.5 * (cfg.theta2 + 2.0 * math.pi)),
    )
    lines = [f"{name},{_fmt(longtime_limit(th, cfg, bc))}" for name, th in mids]
    lines.append(f"total,{_fmt(total_longtime_limit(cfg, bc))}")
    _write_lines(args.out, ["sector,diffracted_limit"] + lines)
    return 0


def _require_smooth(p: Profile) -> None:
    smooth = isinstance(p, SmoothRamp) or (
        isinstance(p, HarmonicSwitched) and p.ramp is not None)
    if not smooth:
        raise UsageError(
            "profile.kind: jump extrapolation needs a smooth profile "
            "(smooth_ramp, or harmonic with ramp_s0)")


def _cmd_jump(args) -> int:
    config = _load_config(args.config)
    cfg = _wedge_from(config)
    bc = _bc_from(config)
    p = _profile_from(config)
    _require_smooth(p)
    quad = _quad_from(config)
    rho = float(args.rho)
    t = float(args.t)
    lines = ["k,re_jump,im_jump"]
    for k in (1, 2):
        v = timedomain.jump(rho, t, k, p, cfg, bc, quad)
        lines.append(f"{k},{_fmt(v.real)},{_fmt(v.imag)}")
    _write_lines(args.out, lines)
    return 0


def _cmd_lap(args) -> int:
    config = _load_config(args.config)
    cfg = _wedge_from(config)
    bc = _bc_from(config)
    p = _profile_from(config)
    if not isinstance(p, HarmonicSwitched):
        raise UsageError("profile.kind: lap needs a harmonic profile")
    quad = _quad_from(config)
    rho = float(args.rho)
    theta = parse_angle(args.theta, "--theta")
    times = [float(s) for s in args.times.split(",") if s]
    a_limit = spectral.limiting_amplitude(rho, theta, cfg, bc, p.a0,
                                          p.omega0, quad)
    lines = ["t,abs_deviation,re_amplitude,im_amplitude"]
    for t in times:
        a_t = spectral.amplitude(rho, theta, t, p, cfg, bc, quad)
        lines.append(f"{_fmt(t)},{_fmt(abs(a_t - a_limit))},"
                     f"{_fmt(a_t.real)},{_fmt(a_t.imag)}")
    lines.append(f"limit,{_fmt(0.0)},{_fmt(a_limit.real)},{_fmt(a_limit.imag)}")
    _write_lines(args.out, lines)
    return 0


def _parse_grid_shape(text: str) -> tuple[int, int]:
    m = re.match(r"^(\d+)x(\d+)$", text)
    if not m:
        raise UsageError(f"--grid: expected NxM, got {text!r}")
    n, mm = int(m.group(1)), int(m.group(2))
    if n < 1 or mm < 1:
        raise UsageError("--grid: both counts must be >= 1")
    return n, mm


def _cmd_sobolev(args) -> int:
    config = _load_config(args.config)
    cfg = _wedge_from(config)
    bc = _bc_from(config)
    if bc is not BoundaryKind.DD:
        raise UsageError("bc.kind: the classical-formula sweep is Dirichlet-only")
    n_vp, n_tau = _parse_grid_shape(args.grid)
    a1, _, vp1, vp2 = _petrashen_angles(cfg)
    band = 0.05
    vps = [vp for vp in
           (band + i * (a1 - 2 * band) / max(n_vp - 1, 1) for i in range(n_vp))
           if abs(vp - vp1) >= band and abs(vp - vp2) >= band]
    taus = [0.05 + i * (0.90 - 0.05) / max(n_tau - 1, 1) for i in range(n_tau)]
    worst = 0.0
    for vp in vps:
        for tau in taus:
            dev = abs(sobolev_U(vp, tau, cfg)
                      - sobolev_total_from_ours(vp, tau, cfg))
            worst = max(worst, dev)
    print(f"points={len(vps) * len(taus)} max_abs_deviation={_fmt(worst)}")
    if worst > args.tol:
        print(f"FAIL: deviation exceeds {_fmt(args.tol)}", file=sys.stderr)
        return 2
    return 0


def _cmd_validate(args) -> int:
    config = _load_config(args.config)
    cfg = _wedge_from(config)
    bc = _bc_from(config)
    quad = _quad_from(config)
    if args.mode == "stationary":
        sec = config.get("validate", {})
        _check_keys(sec, {"omega"}, "validate")
        omega_raw = sec.get("omega", [1.0, 0.5])
        if isinstance(omega_raw, list) and len(omega_raw) == 2:
            omega = complex(float(omega_raw[0]), float(omega_raw[1]))
        elif isinstance(omega_raw, (int, float)):
            omega = complex(float(omega_raw), 0.0)
        else:
            raise UsageError("validate.omega: expected a number or [re, im]")
        report = validation.boundary_report(
            cfg, bc, validation.StationaryMode(omega=omega), quad)
    else:
        p = _profile_from(config)
        _require_smooth(p)
        report = validation.boundary_report(
            cfg, bc, validation.TimeDomainMode(p=p, t=float(args.t)), quad)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(report.to_json() + "\n")
    print(f"face1 {report.face1_condition}: {_fmt(report.face1_residual)}")
    print(f"face2 {report.face2_condition}: {_fmt(report.face2_residual)}")
    if max(report.face1_residual, report.face2_residual) > args.tol:
        print(f"FAIL: residual exceeds {_fmt(args.tol)}", file=sys.stderr)
        return 2
    return 0


def _cmd_spectral(args) -> int:
    config = _load_config(args.config)
    cfg = _wedge_from(config)
    bc = _bc_from(config)
    quad = _quad_from(config)
    sec = config.get("spectral", {})
    _check_keys(sec, {"omega"}, "spectral")
    omega_raw = sec.get("omega", [1.0, 0.5])
    if isinstance(omega_raw, list) and len(omega_raw) == 2:
        omega = complex(float(omega_raw[0]), float(omega_raw[1]))
    elif isinstance(omega_raw, (int, float)):
        omega = complex(float(omega_raw), 0.0)
    else:
        raise UsageError("spectral.omega: expected a number or [re, im]")
    grid = _grid_from(config, ("rho", "theta"))
    points = [(r, th) for r in grid["rho"] for th in grid["theta"]]

    def row(point):
        r, th = point
        sr = spectral.S_r(r, th, omega, cfg, bc)
        sd = spectral.S_d(r, th, omega, cfg, bc, quad)
        ss = sr + sd
        return ",".join(_fmt(v) for v in (
            r, th, sr.real, sr.imag, sd.real, sd.imag, ss.real, ss.imag))

    header = "rho,theta,re_sr,im_sr,re_sd,im_sd,re_ss,im_ss"
    _write_lines(args.out, [header] + _map_ordered(row, points))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgewave",
        description="Exact fields for plane-pulse diffraction by a wedge.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--config", required=True, help="TOML scenario file")
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        sp.set_defaults(fn=fn)
        return sp

    add("field", _cmd_field, "sample u_in/u_r/u_d/u on a (rho,theta,t) grid")
    add("limits", _cmd_limits, "long-time sector limits of the step response")
    jp = add("jump", _cmd_jump, "critical-ray jumps of the diffracted wave")
    jp.add_argument("--rho", default=1.0, type=float)
    jp.add_argument("--t", default=3.0, type=float)
    lp = add("lap", _cmd_lap, "amplitude-vs-limit convergence series")
    lp.add_argument("--rho", default=1.0, type=float)
    lp.add_argument("--theta", default="pi")
    lp.add_argument("--times", default="10,100,1000",
                    help="comma-separated sample times")
    sb = add("sobolev", _cmd_sobolev, "classical-formula equivalence sweep")
    sb.add_argument("--grid", default="20x20", help="NxM (varphi x tau) grid")
    sb.add_argument("--tol", default=1e-10, type=float)
    va = add("validate", _cmd_validate, "boundary residual report")
    va.add_argument("--mode", choices=("stationary", "timedomain"),
                    default="stationary")
    va.add_argument("--t", default=4.0, type=float,
                    help="sample time for timedomain mode")
    va.add_argument("--tol", default=1e-6, type=float)
    add("spectral", _cmd_spectral, "stationary density map at one frequency")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except WedgeWaveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
