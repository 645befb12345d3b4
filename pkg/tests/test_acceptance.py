"""Acceptance gate: the nine contract criteria, one test (and one verdict
line) per criterion, at the pinned tolerances and runtime budgets.

Two criteria are expected to fail and are kept failing on purpose:

* criterion 3: the mixed (DN) kernel approaches its long-time table like
  b**-q instead of b**-2q, so at t/rho = 1e12 the deviation is still around
  1e-4 and the pinned 1e-6 cannot be met.  The double kernels (DD, NN) meet
  it comfortably.
* criterion 4: the pinned jump table contradicts continuity of the total
  field.  The measured jumps are exactly the ones that cancel the
  reflected-wave discontinuity (DD (-1, +1), NN (+1, -1), DN (-1, -1)); the
  pinned table (DD (+1, -1), NN and DN +1) matches only NN at k = 1.

Both failures report the measured values in their assertion messages rather
than weakening the pinned expectations.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest

from wedgewave import (
    BoundaryKind,
    Heaviside,
    HarmonicSwitched,
    PoleHitError,
    QuadratureSpec,
    SmoothRamp,
    S_d,
    S_s,
    StationaryMode,
    Z_from_H,
    Z_kernel,
    amplitude,
    boundary_report,
    diffracted,
    diffracted_delta,
    heaviside_diffracted,
    helmholtz_residual,
    jump,
    limiting_amplitude,
    longtime_limit,
    make_wedge,
    reference_wedge,
    sobolev_U,
    sobolev_total_from_ours,
    total,
    total_longtime_limit,
    wave_residual,
)

REF = reference_wedge()
ALL_BC = (BoundaryKind.DD, BoundaryKind.NN, BoundaryKind.DN)


def _verdict(num: int, ok: bool, budget_s: float, elapsed: float, detail: str) -> None:
    tag = "PASS" if ok else "FAIL"
    print(f"criterion {num} [{tag}] ({elapsed:.2f}s / budget {budget_s:.0f}s) {detail}",
          flush=True)


def test_criterion_1_kernel_route_identity() -> None:
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(10):
        phi = float(rng.uniform(1e-2, math.pi - 1e-2))
        lo = max(0.0, phi - math.pi / 2.0)
        hi = min(math.pi / 2.0, phi)
        cfg = make_wedge(phi, lo + 0.5 * (hi - lo) * float(rng.uniform(0.2, 1.6)))
        beta = rng.uniform(-5.0, 5.0, size=1000) \
            + 1j * rng.uniform(cfg.phi, 2.0 * math.pi, size=1000)
        for bc in ALL_BC:
            try:
                a = Z_from_H(beta, cfg, bc)
                b = Z_kernel(beta, cfg, bc)
            except PoleHitError:
                continue
            rel = np.max(np.abs(a - b) / np.maximum(np.abs(b), 1.0))
            worst = max(worst, float(rel))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and elapsed < 5.0
    _verdict(1, ok, 5.0, elapsed, f"max relative route deviation {worst:.3e}")
    assert worst <= 1e-12
    assert elapsed < 5.0


def test_criterion_2_closed_form_matches_adaptive_quadrature() -> None:
    t0 = time.perf_counter()
    candidates = np.linspace(REF.phi + 0.03, 2.0 * math.pi - 0.03, 60)
    thetas = [float(th) for th in candidates
              if min(abs(th - tk) for tk in REF.critical_angles()) >= 0.05][:40]
    assert len(thetas) == 40
    step = Heaviside()
    worst = 0.0
    for bc in ALL_BC:
        for th in thetas:
            for ratio in (1.1, 1.5, 2.0, 5.0):
                closed = heaviside_diffracted(1.0, th, ratio, REF, bc)
                quad = diffracted(1.0, th, ratio, step, REF, bc)
                rel = abs(quad - closed) / max(abs(closed), 1e-12)
                worst = max(worst, rel)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and elapsed < 30.0
    _verdict(2, ok, 30.0, elapsed,
             f"max relative closed-vs-quadrature deviation {worst:.3e} "
             f"over 480 evaluations")
    assert worst <= 1e-8
    assert elapsed < 30.0


def test_criterion_3_longtime_limits_at_huge_time() -> None:
    t0 = time.perf_counter()
    probes = {"sector1": 1.2, "middle": math.pi, "sector2": 6.0}
    devs: dict[str, float] = {}
    for bc in ALL_BC:
        for name, th in probes.items():
            got = heaviside_diffracted(1.0, th, 1e12, REF, bc)
            want = longtime_limit(th, REF, bc)
            devs[f"{bc.value}/{name}"] = abs(got - want)
    nn_middle = longtime_limit(math.pi, REF, BoundaryKind.NN)
    nn_total = total_longtime_limit(REF, BoundaryKind.NN)
    table_ok = abs(nn_middle - 0.2) <= 1e-12 and abs(nn_total - 1.2) <= 1e-12
    worst_key = max(devs, key=devs.get)
    elapsed = time.perf_counter() - t0
    ok = all(d <= 1e-6 for d in devs.values()) and table_ok and elapsed < 1.0
    _verdict(3, ok, 1.0, elapsed,
             f"worst sector deviation {devs[worst_key]:.3e} at {worst_key}; "
             f"NN middle {nn_middle:.12f}, NN total {nn_total:.12f}")
    assert table_ok
    assert elapsed < 1.0
    assert all(d <= 1e-6 for d in devs.values()), (
        "mixed-kernel convergence is b**-q, not b**-2q; at t/rho = 1e12 the DN "
        f"sectors still deviate by {[f'{k}={v:.2e}' for k, v in devs.items() if v > 1e-6]}"
    )


def test_criterion_4_pinned_jump_table() -> None:
    t0 = time.perf_counter()
    pinned = {
        (BoundaryKind.DD, 1): 1.0,
        (BoundaryKind.DD, 2): -1.0,
        (BoundaryKind.NN, 1): 1.0,
        (BoundaryKind.NN, 2): 1.0,
        (BoundaryKind.DN, 1): 1.0,
        (BoundaryKind.DN, 2): 1.0,
    }
    p = SmoothRamp(1.0)
    measured = {}
    for (bc, k), want in pinned.items():
        measured[(bc, k)] = jump(1.0, 3.0, k, p, REF, bc)
    devs = {key: abs(measured[key] - want) for key, want in pinned.items()}
    elapsed = time.perf_counter() - t0
    ok = all(d <= 1e-3 for d in devs.values()) and elapsed < 30.0
    shown = ", ".join(f"{bc.value} k={k}: {measured[(bc, k)].real:+.6f}"
                      for (bc, k) in pinned)
    _verdict(4, ok, 30.0, elapsed, f"measured jumps {shown}")
    assert elapsed < 30.0
    assert all(d <= 1e-3 for d in devs.values()), (
        "measured jumps are the total-field-continuity values "
        f"({shown}); the pinned table matches only NN k=1"
    )


def test_criterion_5_classical_formula_equivalence() -> None:
    t0 = time.perf_counter()
    a1 = REF.Phi
    vp0 = REF.alpha - math.pi + a1
    vp1, vp2 = math.pi - vp0, 2.0 * a1 - math.pi - vp0
    band = 0.05
    vps = [vp for vp in np.linspace(band, a1 - band, 20)
           if abs(vp - vp1) >= band and abs(vp - vp2) >= band]
    taus = np.linspace(0.05, 0.90, 20)
    worst = 0.0
    for vp in vps:
        for tau in taus:
            dev = abs(sobolev_U(float(vp), float(tau), REF)
                      - sobolev_total_from_ours(float(vp), float(tau), REF))
            worst = max(worst, dev)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and elapsed < 10.0
    _verdict(5, ok, 10.0, elapsed,
             f"max deviation {worst:.3e} on {len(vps) * len(taus)} grid points")
    assert worst <= 1e-10
    assert elapsed < 10.0


def test_criterion_6_stationary_field_solves_helmholtz_with_exact_traces() -> None:
    t0 = time.perf_counter()
    omega = 1.0 + 0.5j
    probe = np.array([2.0 * math.cos(2.8), 2.0 * math.sin(2.8)])
    ratios = {}
    residuals = {}
    for bc in ALL_BC:
        S = lambda y, bc=bc: S_s(
            float(np.hypot(y[0], y[1])),
            float(np.arctan2(y[1], y[0]) % (2.0 * math.pi)),
            omega, REF, bc,
        )
        r_h = helmholtz_residual(S, probe, omega, 2e-2)
        r_h2 = helmholtz_residual(S, probe, omega, 1e-2)
        ratios[bc] = r_h / r_h2
        rep = boundary_report(REF, bc, StationaryMode(omega=omega))
        residuals[bc] = max(rep.face1_residual, rep.face2_residual)
    elapsed = time.perf_counter() - t0
    ratio_ok = all(3.5 <= r <= 4.5 for r in ratios.values())
    trace_ok = all(r <= 1e-6 for r in residuals.values())
    ok = ratio_ok and trace_ok and elapsed < 60.0
    _verdict(6, ok, 60.0, elapsed,
             "helmholtz h->h/2 ratios "
             + ", ".join(f"{bc.value} {r:.3f}" for bc, r in ratios.items())
             + "; max face residuals "
             + ", ".join(f"{bc.value} {r:.2e}" for bc, r in residuals.items()))
    assert ratio_ok
    assert trace_ok
    assert elapsed < 60.0


def test_criterion_7_impulse_transform_reproduces_the_spectrum() -> None:
    t0 = time.perf_counter()
    rho, theta = 1.0, math.pi
    worst = 0.0
    for omega in (1.0 + 1.0j, 2.0 + 0.5j):
        u_max = math.sqrt(40.0 / omega.imag)
        u = np.linspace(1e-5, u_max, 20001)
        t_nodes = rho + u * u
        for bc in ALL_BC:
            jd = np.array([diffracted_delta(rho, theta, float(tn), REF, bc)
                           for tn in t_nodes])
            integrand = 2.0 * u * np.exp(1j * omega * t_nodes) * jd
            transform = np.trapezoid(integrand, u)
            spectrum = S_d(rho, theta, omega, REF, bc)
            rel = abs(transform - spectrum) / abs(spectrum)
            worst = max(worst, rel)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-4 and elapsed < 30.0
    _verdict(7, ok, 30.0, elapsed,
             f"max relative transform-vs-spectrum deviation {worst:.3e}")
    assert worst <= 1e-4
    assert elapsed < 30.0


def test_criterion_8_limiting_amplitude_convergence() -> None:
    t0 = time.perf_counter()
    p = HarmonicSwitched(a0=1.0, omega0=2.0, ramp=SmoothRamp(1.0))
    rho, theta = 1.0, math.pi
    a_inf = limiting_amplitude(rho, theta, REF, BoundaryKind.DD, p.a0, p.omega0)
    devs = []
    for t in (10.0, 100.0, 1000.0):
        a_t = amplitude(rho, theta, t, p, REF, BoundaryKind.DD)
        devs.append(abs(a_t - a_inf))
    elapsed = time.perf_counter() - t0
    decreasing = devs[0] > devs[1] > devs[2]
    ok = decreasing and devs[2] <= 1e-2 and elapsed < 60.0
    _verdict(8, ok, 60.0, elapsed,
             "deviations at t=10/100/1000: "
             + "/".join(f"{d:.3e}" for d in devs))
    assert decreasing
    assert devs[2] <= 1e-2
    assert elapsed < 60.0


def test_criterion_9_causality_and_wave_equation() -> None:
    t0 = time.perf_counter()
    rng = np.random.default_rng(77)
    step = Heaviside()
    checked = 0
    while checked < 1000:
        rho = float(rng.uniform(0.1, 4.0))
        theta = float(rng.uniform(REF.phi + 1e-3, 2.0 * math.pi - 1e-3))
        if min(abs(theta - tk) for tk in REF.critical_angles()) < 1e-3:
            continue
        t = rho * float(rng.uniform(-1.0, 1.0))
        bc = ALL_BC[int(rng.integers(0, 3))]
        assert diffracted(rho, theta, t, step, REF, bc) == 0.0
        checked += 1

    quad = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-13)
    p = SmoothRamp(1.0)

    def field(rho: float, theta: float, t: float) -> complex:
        return total(rho, theta, t, p, REF, BoundaryKind.DD, quad).u_total

    point = (2.0, math.pi, 2.6)
    res = [wave_residual(field, point, h) for h in (4e-2, 2e-2, 1e-2)]
    ratios = [res[i] / res[i + 1] for i in range(2)]
    elapsed = time.perf_counter() - t0
    second_order = all(3.5 <= r <= 4.5 for r in ratios)
    ok = second_order and elapsed < 60.0
    _verdict(9, ok, 60.0, elapsed,
             f"{checked} pre-front samples exactly zero; residual ratios "
             + ", ".join(f"{r:.3f}" for r in ratios))
    assert second_order
    assert elapsed < 60.0
