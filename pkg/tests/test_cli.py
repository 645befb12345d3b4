from __future__ import annotations

import math

import pytest

from wedgewave.cli import UsageError, main, parse_angle

BASE = """\
[wedge]
phi = "pi/3"
alpha = "pi/4"

[bc]
kind = "{bc}"

[grid]
rho = [1.0]
theta = ["pi/2", "pi", "3*pi/2"]
t = {{ start = 1.1, stop = 5.0, count = 3 }}

[spectral]
omega = [1.0, 0.5]

[validate]
omega = [1.0, 0.5]

[profile]
kind = "{profile}"
{profile_keys}
"""


def _config(tmp_path, bc="DD", profile="heaviside", profile_keys="", extra="",
            name="scenario.toml"):
    path = tmp_path / name
    path.write_text(
        BASE.format(bc=bc, profile=profile, profile_keys=profile_keys) + extra
    )
    return str(path)


def test_angle_expressions() -> None:
    assert parse_angle("pi/3", "wedge.phi") == pytest.approx(math.pi / 3.0)
    assert parse_angle("2*pi/3", "x") == pytest.approx(2.0 * math.pi / 3.0)
    assert parse_angle("-pi", "x") == pytest.approx(-math.pi)
    assert parse_angle("3pi/4", "x") == pytest.approx(3.0 * math.pi / 4.0)
    assert parse_angle("0.5", "x") == 0.5
    assert parse_angle(1.25, "x") == 1.25
    with pytest.raises(UsageError):
        parse_angle("about pi", "wedge.phi")


def test_field_writes_the_documented_csv(tmp_path, capsys) -> None:
    cfg = _config(tmp_path)
    out = tmp_path / "field.csv"
    assert main(["field", "--config", cfg, "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "rho,theta,t,re_uin,im_uin,re_ur,im_ur,re_ud,im_ud,re_u,im_u"
    assert len(lines) == 1 + 3 * 3  # 3 angles x 3 times
    for line in lines[1:]:
        cells = [float(c) for c in line.split(",")]
        assert len(cells) == 11
        # the total column is the exact sum of the parts
        assert cells[9] == pytest.approx(cells[3] + cells[5] + cells[7], abs=1e-12)
        assert cells[10] == pytest.approx(cells[4] + cells[6] + cells[8], abs=1e-12)


def test_field_output_is_deterministic(tmp_path) -> None:
    cfg = _config(tmp_path)
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(["field", "--config", cfg, "--out", str(out1)]) == 0
    assert main(["field", "--config", cfg, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_field_parallel_matches_serial(tmp_path, monkeypatch) -> None:
    cfg = _config(tmp_path)
    out1 = tmp_path / "serial.csv"
    out2 = tmp_path / "pool.csv"
    monkeypatch.setenv("WEDGEWAVE_THREADS", "1")
    assert main(["field", "--config", cfg, "--out", str(out1)]) == 0
    monkeypatch.setenv("WEDGEWAVE_THREADS", "4")
    assert main(["field", "--config", cfg, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_field_rejects_delta_profiles(tmp_path, capsys) -> None:
    cfg = _config(tmp_path, profile="delta")
    assert main(["field", "--config", cfg]) == 1
    assert "profile.kind" in capsys.readouterr().err


def test_limits_reports_the_sector_table(tmp_path, capsys) -> None:
    cfg = _config(tmp_path, bc="NN")
    assert main(["limits", "--config", cfg]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "sector,diffracted_limit"
    rows = dict(line.split(",", 1) for line in out[1:])
    assert float(rows["middle"]) == pytest.approx(0.2, abs=1e-12)
    assert float(rows["sector1"]) == pytest.approx(-0.8, abs=1e-12)
    assert float(rows["sector2"]) == pytest.approx(-0.8, abs=1e-12)
    assert float(rows["total"]) == pytest.approx(1.2, abs=1e-12)


def test_jump_command_reports_both_rays(tmp_path, capsys) -> None:
    cfg = _config(tmp_path, profile="smooth_ramp", profile_keys="s0 = 1.0")
    assert main(["jump", "--config", cfg, "--rho", "1.0", "--t", "3.0"]) == 0
    out = capsys.readouterr().out.splitlines()
    values = {}
    for line in out[1:]:
        k, re, im = line.split(",")
        values[int(k)] = float(re)
    assert values[1] == pytest.approx(-1.0, abs=1e-3)
    assert values[2] == pytest.approx(1.0, abs=1e-3)


def test_jump_requires_a_smooth_profile(tmp_path, capsys) -> None:
    cfg = _config(tmp_path, profile="delta")
    assert main(["jump", "--config", cfg]) == 1


def test_sobolev_sweep_passes_at_tolerance(tmp_path, capsys) -> None:
    cfg = _config(tmp_path)
    assert main(["sobolev", "--config", cfg, "--grid", "20x20",
                 "--tol", "1e-10"]) == 0
    out = capsys.readouterr().out
    assert "max_abs_deviation" in out


def test_sobolev_sweep_fails_loudly_below_achievable_tolerance(tmp_path) -> None:
    cfg = _config(tmp_path)
    assert main(["sobolev", "--config", cfg, "--grid", "8x8",
                 "--tol", "1e-18"]) == 2


def test_validate_stationary_report(tmp_path, capsys) -> None:
    cfg = _config(tmp_path)
    out = tmp_path / "report.json"
    assert main(["validate", "--config", cfg, "--mode", "stationary",
                 "--out", str(out)]) == 0
    import json

    payload = json.loads(out.read_text())
    assert payload["bc"] == "DD"
    assert all(f["max_residual"] <= 1e-6 for f in payload["faces"])


def test_validate_timedomain_with_ramp(tmp_path, capsys) -> None:
    cfg = _config(tmp_path, bc="NN", profile="smooth_ramp", profile_keys="s0 = 1.0")
    assert main(["validate", "--config", cfg, "--mode", "timedomain",
                 "--t", "4.0", "--tol", "1e-4"]) == 0


def test_spectral_map_columns_are_consistent(tmp_path) -> None:
    cfg = _config(tmp_path)
    out = tmp_path / "spec.csv"
    assert main(["spectral", "--config", cfg, "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "rho,theta,re_sr,im_sr,re_sd,im_sd,re_ss,im_ss"
    for line in lines[1:]:
        c = [float(x) for x in line.split(",")]
        assert c[6] == pytest.approx(c[2] + c[4], abs=1e-12)
        assert c[7] == pytest.approx(c[3] + c[5], abs=1e-12)


def test_lap_series_decreases_toward_the_limit(tmp_path, capsys) -> None:
    cfg = _config(tmp_path, profile="harmonic",
                  profile_keys='a0 = "1.0"\nomega0 = 2.0\nramp_s0 = 1.0')
    assert main(["lap", "--config", cfg, "--rho", "1.0", "--theta", "pi",
                 "--times", "10,100"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "t,abs_deviation,re_amplitude,im_amplitude"
    devs = [float(line.split(",")[1]) for line in out[1:] if not line.startswith("limit")]
    assert len(devs) == 2 and devs[1] < devs[0]


def test_unknown_keys_are_named_in_errors(tmp_path, capsys) -> None:
    cfg = _config(tmp_path, extra="\n[wedge.bogus]\nx = 1\n")
    assert main(["field", "--config", cfg]) == 1
    err = capsys.readouterr().err
    assert "wedge" in err and "bogus" in err


def test_bad_boundary_kind_is_an_error(tmp_path, capsys) -> None:
    cfg = _config(tmp_path, bc="XX")
    assert main(["field", "--config", cfg]) == 1
    assert "bc.kind" in capsys.readouterr().err


def test_missing_config_file_is_an_error(tmp_path, capsys) -> None:
    assert main(["field", "--config", str(tmp_path / "absent.toml")]) == 1


def test_bad_thread_count_is_an_error(tmp_path, capsys, monkeypatch) -> None:
    monkeypatch.setenv("WEDGEWAVE_THREADS", "zero")
    cfg = _config(tmp_path)
    assert main(["field", "--config", cfg]) == 1


def test_unknown_subcommand_fails() -> None:
    assert main(["frobnicate"]) == 1
