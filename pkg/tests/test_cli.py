"""End-to-end tests of the command-line interface and its artifacts."""

from __future__ import annotations

import json
import math

import pytest

from ratdiff.cli import main
from ratdiff.serialize import parse_complex


def read_json(path):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def as_complex(obj) -> complex:
    return complex(obj["re"], obj["im"])


def dir_bytes(root):
    return {
        path.name: path.read_bytes() for path in sorted(root.iterdir()) if path.is_file()
    }


def test_parse_complex_spellings() -> None:
    assert parse_complex(2) == 2 + 0j
    assert parse_complex({"re": 1, "im": -2}) == 1 - 2j
    assert parse_complex({"im": 3}) == 3j
    assert parse_complex([0.5, 0.25]) == 0.5 + 0.25j
    assert parse_complex("1+2i") == 1 + 2j
    assert parse_complex("0.5 - 0.25j") == 0.5 - 0.25j
    with pytest.raises(ValueError):
        parse_complex({"re": 1, "imaginary": 2})
    with pytest.raises(ValueError):
        parse_complex([1, 2, 3])
    with pytest.raises(ValueError):
        parse_complex("not a number")
    with pytest.raises(ValueError):
        parse_complex(True)


def test_analyze_report_structure(tmp_path) -> None:
    code = main(
        [
            "analyze",
            "--form",
            "constant",
            "--p",
            "0.5",
            "--q",
            "0.5i",
            "--epsilons",
            "0.5,1.0",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    report = read_json(tmp_path / "analyze.json")
    assert report["version"]
    assert report["config"]["form"] == "constant"
    assert len(report["equilibria"]) == 2
    stable = report["equilibria"][1]
    assert as_complex(stable["value"]) == pytest.approx(
        0.683802 - 0.133552j, abs=1e-5
    )
    assert stable["clark"] is True
    assert stable["classification"] == "locally_asymptotically_stable"
    assert len(report["boundedness"]) == 2
    assert report["period2"]["note"] is None
    assert len(report["period2"]["cycles"]) == 2


def test_flags_override_config_file(tmp_path) -> None:
    config = tmp_path / "run.json"
    config.write_text(
        json.dumps({"form": "lagged", "p": {"re": 9.0, "im": 0.0}, "q": "2"})
    )
    out = tmp_path / "out"
    code = main(
        [
            "analyze",
            "--config",
            str(config),
            "--p",
            "0.25",
            "--out-dir",
            str(out),
        ]
    )
    assert code == 0
    report = read_json(out / "analyze.json")
    assert report["config"]["form"] == "lagged"
    assert as_complex(report["config"]["p"]) == 0.25
    assert as_complex(report["config"]["q"]) == 2.0


def test_unknown_config_key_is_rejected(tmp_path) -> None:
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"form": "lagged", "polw": 1}))
    assert main(["analyze", "--config", str(config)]) == 2


def test_state_free_denominator_exits_config_error(tmp_path) -> None:
    code = main(
        [
            "analyze",
            "--form",
            "full",
            "--alpha",
            "1",
            "--beta",
            "1",
            "--gamma",
            "1",
            "--a",
            "1",
            "--b",
            "0",
            "--c",
            "0",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 2


def test_analysis_degeneracy_exits_three(tmp_path) -> None:
    # The lagged zero-branch linearization divides by p.
    code = main(
        [
            "analyze",
            "--form",
            "lagged",
            "--p",
            "0",
            "--q",
            "2",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 3


def test_io_failure_exits_four(tmp_path) -> None:
    blocker = tmp_path / "blocker"
    blocker.write_text("file, not a directory")
    code = main(
        [
            "analyze",
            "--form",
            "constant",
            "--p",
            "0.5",
            "--q",
            "0.25",
            "--out-dir",
            str(blocker / "nested"),
        ]
    )
    assert code == 4


def test_period2_without_prime_cycle_reports_note(tmp_path) -> None:
    code = main(
        [
            "period2",
            "--form",
            "lagged",
            "--p",
            "1",
            "--q",
            "0.5",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    report = read_json(tmp_path / "period2.json")
    assert report["period2"]["cycles"] == []
    assert report["period2"]["note"]


def test_simulate_artifacts(tmp_path) -> None:
    code = main(
        [
            "simulate",
            "--form",
            "constant",
            "--p",
            "0",
            "--q",
            "0",
            "--seed-count",
            "3",
            "--n-steps",
            "50",
            "--transient",
            "5",
            "--rng-seed",
            "1",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    report = read_json(tmp_path / "simulate.json")
    assert len(report["orbits"]) == 3
    for entry in report["orbits"]:
        assert entry["termination"] == "completed"
        assert entry["detected_period"] == 1
    lines = (tmp_path / "orbit_00.csv").read_text().splitlines()
    assert lines[0] == "step,re,im,modulus"
    first_step = int(lines[1].split(",")[0])
    assert first_step == -1
    # p = q = 0 maps every state to exactly 1 from the first step on.
    for line in lines[3:]:
        cells = line.split(",")
        assert float(cells[1]) == 1.0
        assert float(cells[2]) == 0.0


def test_simulate_collapses_onto_stable_equilibrium(tmp_path) -> None:
    code = main(
        [
            "simulate",
            "--form",
            "constant",
            "--p",
            "0.5",
            "--q",
            "0.5i",
            "--seed-count",
            "4",
            "--n-steps",
            "200",
            "--transient",
            "20",
            "--rng-seed",
            "0",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    report = read_json(tmp_path / "simulate.json")
    target = 0.6838024869391472 - 0.13355248592704486j
    for entry in report["orbits"]:
        final = as_complex(entry["final_value"])
        assert abs(final - target) < 1e-6


def test_simulate_plot_writes_svg(tmp_path) -> None:
    code = main(
        [
            "simulate",
            "--form",
            "lagged",
            "--p",
            "0.2037+0.5444i",
            "--q",
            "0.8749+0.1210i",
            "--seed-count",
            "3",
            "--n-steps",
            "300",
            "--transient",
            "30",
            "--rng-seed",
            "1",
            "--plot",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    svg = (tmp_path / "orbit.svg").read_text()
    assert svg.lstrip().startswith("<?xml")
    assert "percentile" in svg


def test_lyapunov_table_and_mirror(tmp_path) -> None:
    config = tmp_path / "scan.json"
    config.write_text(
        json.dumps(
            {
                "form": "lagged",
                "parameter_sets": [
                    {"p": {"re": 0.2037, "im": 0.5444}, "q": {"re": 0.8749, "im": 0.121}}
                ],
                "seed_count": 3,
                "n_steps": 800,
                "transient": 80,
                "rng_seed": 1,
                "out_dir": str(tmp_path / "scan"),
            }
        )
    )
    assert main(["lyapunov", "--config", str(config)]) == 0
    lines = (tmp_path / "scan" / "lyapunov.csv").read_text().splitlines()
    assert lines[0].startswith("index,p_re,p_im,q_re,q_im,min_exponent")
    assert len(lines) == 2
    cells = lines[1].split(",")
    assert float(cells[5]) <= float(cells[7]) <= float(cells[6])
    mirror = read_json(tmp_path / "scan" / "lyapunov.json")
    scan = mirror["scans"][0]
    assert len(scan["estimates"]) == 3
    assert scan["fraction_positive"] == float(cells[8])


def test_lyapunov_empty_parameter_list_is_config_error(tmp_path) -> None:
    config = tmp_path / "scan.json"
    config.write_text(json.dumps({"form": "lagged", "parameter_sets": []}))
    assert main(["lyapunov", "--config", str(config)]) == 2


def test_seed_count_validation(tmp_path) -> None:
    assert (
        main(
            [
                "lyapunov",
                "--form",
                "lagged",
                "--p",
                "2",
                "--q",
                "1",
                "--seed-count",
                "1",
                "--out-dir",
                str(tmp_path),
            ]
        )
        == 2
    )


def test_sweep_grid_artifacts(tmp_path) -> None:
    code = main(
        [
            "sweep",
            "--form",
            "lagged",
            "--q",
            "0.8749+0.1210i",
            "--sweep-parameter",
            "p",
            "--re-min",
            "0.1",
            "--re-max",
            "0.5",
            "--re-steps",
            "2",
            "--im-min",
            "0.1",
            "--im-max",
            "0.5",
            "--im-steps",
            "2",
            "--seed-count",
            "2",
            "--n-steps",
            "200",
            "--transient",
            "20",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    lines = (tmp_path / "sweep.csv").read_text().splitlines()
    assert lines[0] == "re,im,mean_exponent,fraction_positive,excluded"
    assert len(lines) == 5
    report = read_json(tmp_path / "sweep.json")
    assert len(report["mean_exponent_grid"]) == 2
    assert len(report["mean_exponent_grid"][0]) == 2


def test_full_run_is_byte_deterministic(tmp_path) -> None:
    args = [
        "simulate",
        "--form",
        "lagged",
        "--p",
        "0.2037+0.5444i",
        "--q",
        "0.8749+0.1210i",
        "--seed-count",
        "2",
        "--n-steps",
        "200",
        "--transient",
        "20",
        "--rng-seed",
        "3",
        "--plot",
        "--out-dir",
        str(tmp_path),
    ]
    assert main(args) == 0
    first = dir_bytes(tmp_path)
    assert main(args) == 0
    second = dir_bytes(tmp_path)
    assert first == second
    assert "orbit.svg" in first


def test_explicit_seeds_are_used(tmp_path) -> None:
    config = tmp_path / "run.json"
    config.write_text(
        json.dumps(
            {
                "form": "constant",
                "p": {"re": 0.0, "im": 0.0},
                "q": {"re": 0.0, "im": 0.0},
                "seeds": [[0.25, 0.125]],
                "n_steps": 30,
                "transient": 3,
                "out_dir": str(tmp_path / "out"),
            }
        )
    )
    assert main(["simulate", "--config", str(config)]) == 0
    report = read_json(tmp_path / "out" / "simulate.json")
    assert len(report["orbits"]) == 1
    assert as_complex(report["orbits"][0]["w0"]) == 0.25
    assert as_complex(report["orbits"][0]["w_minus1"]) == 0.125


def test_transient_must_stay_below_steps(tmp_path) -> None:
    code = main(
        [
            "simulate",
            "--form",
            "constant",
            "--p",
            "0",
            "--q",
            "0",
            "--n-steps",
            "10",
            "--transient",
            "10",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 2


def test_csv_floats_round_trip(tmp_path) -> None:
    assert (
        main(
            [
                "simulate",
                "--form",
                "lagged",
                "--p",
                "0.2037+0.5444i",
                "--q",
                "0.8749+0.1210i",
                "--seed-count",
                "1",
                "--n-steps",
                "20",
                "--transient",
                "2",
                "--rng-seed",
                "1",
                "--out-dir",
                str(tmp_path),
            ]
        )
        == 0
    )
    lines = (tmp_path / "orbit_00.csv").read_text().splitlines()[1:]
    for line in lines:
        cells = line.split(",")
        re, im, modulus = float(cells[1]), float(cells[2]), float(cells[3])
        assert modulus == pytest.approx(math.hypot(re, im), rel=1e-15)
