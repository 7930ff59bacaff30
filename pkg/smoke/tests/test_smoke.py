import subprocess
import sys

import pytest

from sdk_smoke import SmokeReport, load_sdk, run_roundtrip


def test_all_committed_cases_pass(generated_py, cases_dir, capsys):
    report = run_roundtrip(generated_py, cases_dir)
    assert report.ok
    assert report.cases_run == 5
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "PASS alice",
        "PASS bad_unknown_property",
        "PASS cafe",
        "PASS family",
        "PASS group_empty",
    ]


def test_report_invariant():
    assert SmokeReport().ok
    assert not SmokeReport(cases_run=1, failures=[("x", "a", "b")]).ok


def test_missing_sdk_is_hard_failure(tmp_path, cases_dir):
    with pytest.raises(FileNotFoundError):
        run_roundtrip(tmp_path / "nowhere", cases_dir)


def test_mismatch_is_recorded(generated_py, tmp_path, cases_dir, capsys):
    tampered = (cases_dir / "alice.json").read_text(encoding="utf-8")
    (tmp_path / "alice.json").write_text(tampered.replace("30", "31"))
    (tmp_path / "alice.nt").write_text((cases_dir / "alice.nt").read_text())
    report = run_roundtrip(generated_py, tmp_path)
    # re-encode matches the tampered input, but the stale triples sidecar
    # must be flagged
    assert [name for name, _, _ in report.failures] == ["alice.nt"]
    assert "FAIL alice" in capsys.readouterr().out


def test_accepting_a_bad_case_is_a_failure(generated_py, tmp_path, capsys):
    good = (generated_py.parent / ".." / "smoke" / "cases" / "alice.json").resolve()
    (tmp_path / "bad_actually_fine.json").write_text(good.read_text(encoding="utf-8"))
    report = run_roundtrip(generated_py, tmp_path)
    assert report.failures == [("bad_actually_fine", "decode error", "accepted")]


def test_runner_script_exit_codes(smoke_root, generated_py, cases_dir):
    script = smoke_root / "run"
    done = subprocess.run(
        [sys.executable, str(script), str(generated_py), str(cases_dir)],
        capture_output=True, text=True,
    )
    assert done.returncode == 0
    assert "PASS alice" in done.stdout

    usage = subprocess.run(
        [sys.executable, str(script)], capture_output=True, text=True
    )
    assert usage.returncode == 2
