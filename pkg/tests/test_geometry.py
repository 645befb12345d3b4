from __future__ import annotations

import math

import numpy as np
import pytest

from wedgewave import (
    DomainError,
    IncidenceOutOfRangeError,
    SectorKind,
    WedgeAngleOutOfRangeError,
    classify,
    make_wedge,
    reference_wedge,
)

REF = reference_wedge()


def test_reference_configuration_derived_quantities() -> None:
    assert REF.Phi == pytest.approx(5.0 * math.pi / 3.0, abs=1e-15)
    assert REF.q == pytest.approx(0.3, abs=1e-15)
    assert REF.theta1 == pytest.approx(5.0 * math.pi / 12.0, abs=1e-15)
    assert REF.theta2 == pytest.approx(7.0 * math.pi / 4.0, abs=1e-15)


def test_right_angle_wedge_derived_quantities() -> None:
    cfg = make_wedge(math.pi / 2, math.pi / 4)
    assert cfg.Phi == pytest.approx(3.0 * math.pi / 2.0, abs=1e-15)
    assert cfg.q == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert cfg.theta1 == pytest.approx(3.0 * math.pi / 4.0, abs=1e-15)
    assert cfg.theta2 == pytest.approx(7.0 * math.pi / 4.0, abs=1e-15)


def test_incidence_window_is_enforced() -> None:
    with pytest.raises(IncidenceOutOfRangeError):
        make_wedge(math.pi / 3, math.pi / 2)
    with pytest.raises(IncidenceOutOfRangeError):
        make_wedge(2.5, 0.5)  # below phi - pi/2
    with pytest.raises(IncidenceOutOfRangeError):
        make_wedge(math.pi / 3, 0.0)


def test_wedge_angle_must_be_strictly_between_zero_and_pi() -> None:
    for phi in (0.0, math.pi, -0.1, 4.0):
        with pytest.raises(WedgeAngleOutOfRangeError):
            make_wedge(phi, 0.3)


def test_classification_of_open_sectors() -> None:
    assert classify(math.pi, REF).kind is SectorKind.SHADOWED_MIDDLE
    assert classify(1.2, REF).kind is SectorKind.REFLECTION_SECTOR_1
    assert classify(6.0, REF).kind is SectorKind.REFLECTION_SECTOR_2


def test_classification_flags_critical_rays_with_index() -> None:
    hit1 = classify(REF.theta1, REF)
    assert hit1.kind is SectorKind.CRITICAL_RAY and hit1.index == 1
    hit2 = classify(REF.theta2 + 1e-9, REF)
    assert hit2.kind is SectorKind.CRITICAL_RAY and hit2.index == 2


def test_classification_of_faces_and_wedge_interior() -> None:
    face2 = classify(REF.phi, REF)
    assert face2.kind is SectorKind.FACE and face2.index == 2
    face1 = classify(2.0 * math.pi, REF)
    assert face1.kind is SectorKind.FACE and face1.index == 1
    assert classify(0.0, REF).kind is SectorKind.FACE
    assert classify(0.5, REF).kind is SectorKind.INSIDE_WEDGE


def test_classify_rejects_angles_outside_full_turn() -> None:
    with pytest.raises(DomainError):
        classify(-0.2, REF)
    with pytest.raises(DomainError):
        classify(2.0 * math.pi + 0.1, REF)
    with pytest.raises(DomainError):
        classify(math.nan, REF)


def test_exterior_membership_includes_faces() -> None:
    assert REF.exterior_contains(REF.phi)
    assert REF.exterior_contains(2.0 * math.pi)
    assert REF.exterior_contains(math.pi)
    assert not REF.exterior_contains(0.5)
    assert not REF.exterior_contains(-0.2)


def test_propagation_directions_give_polar_delays() -> None:
    rng = np.random.default_rng(7)
    for _ in range(50):
        rho = float(rng.uniform(0.1, 5.0))
        theta = float(rng.uniform(REF.phi, 2.0 * math.pi))
        y = np.array([rho * math.cos(theta), rho * math.sin(theta)])
        assert float(REF.n0 @ y) == pytest.approx(
            rho * math.cos(theta - REF.alpha), abs=1e-12
        )
        assert float(REF.n1 @ y) == pytest.approx(
            rho * math.cos(theta - REF.theta1), abs=1e-12
        )
        assert float(REF.n2 @ y) == pytest.approx(
            rho * math.cos(theta - REF.theta2), abs=1e-12
        )


def test_derived_quantities_satisfy_order_invariants_for_random_wedges() -> None:
    rng = np.random.default_rng(42)
    for _ in range(10_000):
        phi = float(rng.uniform(1e-3, math.pi - 1e-3))
        lo = max(0.0, phi - math.pi / 2.0)
        hi = min(math.pi / 2.0, phi)
        alpha = float(rng.uniform(lo + 1e-6, hi - 1e-6))
        cfg = make_wedge(phi, alpha)
        assert cfg.phi < cfg.theta1 < cfg.theta2 < 2.0 * math.pi
        assert 0.25 < cfg.q < 0.5
        assert cfg.Phi == pytest.approx(2.0 * math.pi - phi, abs=1e-14)
