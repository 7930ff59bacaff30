import filecmp

import pytest

from knowforge.cli import main
from knowforge.vocab import bundled_source

CYCLE_TTL = (
    "@prefix know: <https://know.dev/> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "know:A a owl:Class ; rdfs:subClassOf know:B .\n"
    "know:B a owl:Class ; rdfs:subClassOf know:A .\n"
)

NO_DOMAIN_TTL = (
    "@prefix know: <https://know.dev/> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
    "know:stray a owl:DatatypeProperty ; rdfs:range xsd:string .\n"
)


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_fixture_matches_golden(capsys, repo_root):
    code, out, err = run(capsys, "parse", str(repo_root / "vocab" / "know.ttl"))
    assert code == 0
    assert out == (repo_root / "vocab" / "know.nt").read_text(encoding="utf-8")


def test_parse_empty_file(capsys, tmp_path):
    empty = tmp_path / "empty.ttl"
    empty.write_text("")
    code, out, err = run(capsys, "parse", str(empty))
    assert code == 0
    assert out == ""


def test_parse_missing_file(capsys, tmp_path):
    code, out, err = run(capsys, "parse", str(tmp_path / "nope.ttl"))
    assert code == 2
    assert "nope.ttl" in err


def test_parse_error_reports_position(capsys, tmp_path):
    bad = tmp_path / "bad.ttl"
    bad.write_text("know:Person a owl:Class .\n")
    code, out, err = run(capsys, "parse", str(bad))
    assert code == 1
    assert "bad.ttl:1:1:" in err


def test_validate_fixture(capsys, repo_root):
    code, out, err = run(capsys, "validate", str(repo_root / "vocab" / "know.ttl"))
    assert code == 0
    assert out == ""


def test_validate_cycle(capsys, tmp_path):
    path = tmp_path / "cycle.ttl"
    path.write_text(CYCLE_TTL)
    code, out, err = run(capsys, "validate", str(path))
    assert code == 1
    assert out.startswith("error CYCLE ")


def test_validate_warning_exits_zero(capsys, tmp_path):
    path = tmp_path / "warn.ttl"
    path.write_text(NO_DOMAIN_TTL)
    code, out, err = run(capsys, "validate", str(path))
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("warning NO_DOMAIN ")]
    assert len(lines) == 1


def test_generate_matches_goldens(capsys, tmp_path, repo_root):
    ttl = str(repo_root / "vocab" / "know.ttl")
    code, out, err = run(
        capsys, "generate", ttl, "--target", "py", "--target", "ts",
        "--out", str(tmp_path / "g1"),
    )
    assert code == 0
    listed = out.splitlines()
    assert listed == sorted(listed)
    assert "py/person.py" in listed
    for token in ("py", "ts"):
        cmp = filecmp.dircmp(tmp_path / "g1" / token, repo_root / "golden" / token)
        assert not cmp.diff_files and not cmp.left_only and not cmp.right_only


def test_generate_twice_identical(capsys, tmp_path, repo_root):
    ttl = str(repo_root / "vocab" / "know.ttl")
    for name in ("a", "b"):
        code, _, _ = run(
            capsys, "generate", ttl, "--target", "all", "--out", str(tmp_path / name)
        )
        assert code == 0
    for token in ("c", "go", "py", "rs", "ts"):
        cmp = filecmp.dircmp(tmp_path / "a" / token, tmp_path / "b" / token)
        assert not cmp.diff_files and not cmp.left_only and not cmp.right_only


def test_generate_unknown_target(capsys, tmp_path, repo_root):
    code, out, err = run(
        capsys, "generate", str(repo_root / "vocab" / "know.ttl"),
        "--target", "cobol", "--out", str(tmp_path / "x"),
    )
    assert code == 2
    assert "cobol" in err
    assert "ts" in err  # lists available tokens


def test_generate_data_only_profile_fails(capsys, tmp_path, repo_root):
    code, out, err = run(
        capsys, "generate", str(repo_root / "vocab" / "know.ttl"),
        "--target", "java", "--out", str(tmp_path / "x"),
    )
    assert code == 1
    assert not (tmp_path / "x" / "java").exists()


def test_generate_refuses_invalid_model(capsys, tmp_path):
    path = tmp_path / "cycle.ttl"
    path.write_text(CYCLE_TTL)
    code, out, err = run(
        capsys, "generate", str(path), "--target", "py", "--out", str(tmp_path / "x")
    )
    assert code == 1
    assert "CYCLE" in err
    assert not (tmp_path / "x" / "py").exists()


def test_targets_listing(capsys):
    code, out, err = run(capsys, "targets")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert lines == sorted(lines)
    assert "rs  trait_record  implemented" in lines
    assert "swift  interface_record  data-only" in lines


def test_default_base_is_know(capsys, tmp_path):
    src = bundled_source().replace("@base <https://know.dev/> .\n", "")
    path = tmp_path / "nobase.ttl"
    path.write_text(src)
    code, out, err = run(capsys, "parse", str(path))
    assert code == 0
    assert "<https://know.dev/Person>" in out
