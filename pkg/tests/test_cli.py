"""Command-line entry point: flags, report formats, exit codes, determinism."""

import json
import time

from toruslie import cli, suites


def run_main(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_json_report_shape_and_echo(capsys):
    code, out, err = run_main(
        ["--n", "2", "--lambda", "1/3,1/2", "--suite", "iso,lattice"], capsys)
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"config", "suites"}
    cfgd = report["config"]
    assert cfgd["n"] == 2
    assert cfgd["lambda"] == ["1/3", "1/2"]
    assert cfgd["suites"] == ["iso", "lattice"]
    assert cfgd["window"] == {"central": 2, "genBound": 2,
                              "depth": 3, "margin": 6}
    names = [s["name"] for s in report["suites"]]
    assert names == ["iso", "lattice"]
    for entry in report["suites"]:
        assert set(entry) <= {"name", "status", "counters", "timeMs",
                              "logDigest", "failures"}
        assert entry["status"] in ("pass", "evidence-pass")
        assert "failures" not in entry
        assert entry["timeMs"] == 0  # --timings not passed
        assert len(entry["logDigest"]) == 64


def test_evidence_suites_never_plain_pass(capsys):
    code, out, _ = run_main(
        ["--n", "2", "--lambda", "1/3,1/2",
         "--suite", "nonminuscule,simplicity"], capsys)
    assert code == 0
    for entry in json.loads(out)["suites"]:
        assert entry["status"] == "evidence-pass"


def test_csv_has_one_row_per_suite(capsys):
    code, out, _ = run_main(
        ["--n", "2", "--suite", "iso,identities,axioms", "--format", "csv"],
        capsys)
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 4
    assert lines[0].startswith("name,status,")
    assert lines[1].split(",")[0] == "iso"


def test_unknown_suite_is_usage_error(capsys):
    code, out, err = run_main(["--n", "2", "--suite", "nope"], capsys)
    assert code == 2
    assert not out
    assert "unknown suite" in err


def test_margin_violation_is_usage_error(capsys):
    code, _, err = run_main(
        ["--n", "2", "--window", "2,2,3,1", "--suite", "iso"], capsys)
    assert code == 2
    assert "margin violation" in err


def test_bad_lambda_is_usage_error(capsys):
    code, _, err = run_main(
        ["--n", "2", "--lambda", "1/3", "--suite", "iso"], capsys)
    assert code == 2
    assert "error:" in err


def test_out_file_written_and_stable(tmp_path, capsys):
    argv = ["--n", "2", "--lambda", "1/3,1/2", "--suite", "lattice,iso",
            "--seed", "11"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(argv + ["--out", str(a)]) == 0
    time.sleep(0.01)  # wall time must not leak into the default report
    assert cli.main(argv + ["--out", str(b), "--workers", "3"]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["config"]["seed"] == 11


def test_failing_suite_sets_exit_code(monkeypatch, capsys):
    def broken(cfg, workers=1):
        rec = suites.Recorder("iso")
        rec.check("fingerprints_distinguish", False, "forced")
        return rec.result(time.perf_counter())

    monkeypatch.setitem(suites.SUITES, "iso", broken)
    code, out, err = run_main(["--n", "2", "--suite", "iso"], capsys)
    assert code == 1
    assert json.loads(out)["suites"][0]["status"] == "fail"
    assert "fingerprints_distinguish" in err


def test_timings_flag_reports_wall_time(capsys):
    code, out, _ = run_main(
        ["--n", "2", "--suite", "identities", "--timings"], capsys)
    assert code == 0
    entry = json.loads(out)["suites"][0]
    assert entry["timeMs"] >= 0
