"""Interchange smoke harness for a generated Python SDK tree.

Loads the SDK package directly from a directory (no install step), then
replays committed case files: each ``*.json`` document is decoded,
re-encoded, and compared byte-for-byte with the original; a ``*.nt``
sidecar, when present, must match the SDK's triples export the same way.
Case files whose name starts with ``bad_`` are corrupted on purpose and
pass when the decoder rejects them.

The harness depends only on the generated tree and the case files.
"""

from __future__ import annotations

import importlib.util
import sys
from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class SmokeReport:
    cases_run: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def load_sdk(generated_dir: Path, name: str = "smoke_know_sdk"):
    """Import the generated package from a path, outside sys.path."""
    init = Path(generated_dir) / "__init__.py"
    if not init.is_file():
        raise FileNotFoundError(f"no generated SDK at {generated_dir}")
    spec = importlib.util.spec_from_file_location(
        name, init, submodule_search_locations=[str(generated_dir)]
    )
    module = importlib.util.module_from_spec(spec)
    sys.modules[name] = module
    saved = sys.dont_write_bytecode
    sys.dont_write_bytecode = True  # don't litter the generated tree
    try:
        spec.loader.exec_module(module)
    finally:
        sys.dont_write_bytecode = saved
    return module


def _run_case(sdk, path: Path, report: SmokeReport) -> None:
    text = path.read_text(encoding="utf-8")
    name = path.stem
    if name.startswith("bad_"):
        try:
            sdk.decode_json(text)
        except Exception:
            return
        report.failures.append((name, "decode error", "accepted"))
        return
    try:
        entity = sdk.decode_json(text)
    except Exception as exc:
        report.failures.append((name, text, f"decode error: {exc}"))
        return
    encoded = entity.to_json_text()
    if encoded != text:
        report.failures.append((name, text, encoded))
    sidecar = path.with_suffix(".nt")
    if sidecar.is_file():
        expected = sidecar.read_text(encoding="utf-8")
        actual = entity.to_ntriples()
        if actual != expected:
            report.failures.append((name + ".nt", expected, actual))


def run_roundtrip(generated_dir: Path, cases_dir: Path) -> SmokeReport:
    sdk = load_sdk(Path(generated_dir))
    report = SmokeReport()
    cases = sorted(Path(cases_dir).glob("*.json"))
    if not cases:
        raise FileNotFoundError(f"no case files in {cases_dir}")
    for path in cases:
        before = len(report.failures)
        _run_case(sdk, path, report)
        report.cases_run += 1
        status = "PASS" if len(report.failures) == before else "FAIL"
        print(f"{status} {path.stem}")
    return report


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else argv
    if len(args) != 2:
        print("usage: run <generated-py-dir> <cases-dir>", file=sys.stderr)
        return 2
    report = run_roundtrip(Path(args[0]), Path(args[1]))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
