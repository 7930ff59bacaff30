"""knowforge command line: parse, validate, generate, targets.

Standard output stays machine-consumable; all logging goes to stderr.
Exit codes: 0 success, 1 diagnostics with errors or generation failure,
2 usage or I/O errors.
"""

from __future__ import annotations

import argparse
import shutil
import sys
import tempfile
from pathlib import Path

from .emit import IMPLEMENTED_TOKENS, NotImplementedProfileError, emit
from .ir import (
    UnknownProfileError,
    UnsupportedDatatypeError,
    available_tokens,
    build_ir,
    default_profiles_dir,
    load_profile,
)
from .model import Severity, build_model, validate
from .rdf import Iri, ParseError, parse_turtle, to_ntriples

DEFAULT_BASE = "https://know.dev/"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _read_input(path: str) -> str:
    p = Path(path)
    try:
        return p.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"knowforge: cannot read {path}: {exc.strerror}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_or_exit(path: str, base: str):
    text = _read_input(path)
    try:
        return parse_turtle(text, Iri(base))
    except ParseError as exc:
        print(f"{path}:{exc.location}: {exc.message}", file=sys.stderr)
        raise SystemExit(EXIT_FAILURE)


def cmd_parse(args: argparse.Namespace) -> int:
    graph = _parse_or_exit(args.input, args.base)
    sys.stdout.write(to_ntriples(graph))
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    graph = _parse_or_exit(args.input, args.base)
    model = build_model(graph, Iri(args.base))
    diagnostics = validate(model)
    for d in diagnostics:
        subject = d.subject.value if d.subject else "-"
        print(f"{d.severity.value} {d.code} {subject}: {d.message}")
    has_errors = any(d.severity is Severity.ERROR for d in diagnostics)
    return EXIT_FAILURE if has_errors else EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    profiles_dir = default_profiles_dir()
    known = available_tokens(profiles_dir)
    tokens: list[str] = []
    for token in args.target:
        if token == "all":
            tokens.extend(t for t in sorted(IMPLEMENTED_TOKENS) if t not in tokens)
        elif token in known:
            if token not in tokens:
                tokens.append(token)
        else:
            print(
                f"knowforge: unknown target '{token}'; available: {', '.join(known)}",
                file=sys.stderr,
            )
            return EXIT_USAGE

    graph = _parse_or_exit(args.input, args.base)
    model = build_model(graph, Iri(args.base))
    diagnostics = validate(model)
    errors = [d for d in diagnostics if d.severity is Severity.ERROR]
    if errors:
        for d in errors:
            subject = d.subject.value if d.subject else "-"
            print(f"error {d.code} {subject}: {d.message}", file=sys.stderr)
        return EXIT_FAILURE

    out_root = Path(args.out)
    out_root.mkdir(parents=True, exist_ok=True)
    written: list[str] = []
    for token in tokens:
        profile = load_profile(token, profiles_dir)
        try:
            fileset = emit(build_ir(model, profile), profile)
        except (NotImplementedProfileError, UnsupportedDatatypeError) as exc:
            print(f"knowforge: {exc}", file=sys.stderr)
            return EXIT_FAILURE
        # Assemble in a staging dir, then swap in atomically per target.
        staging = Path(tempfile.mkdtemp(prefix=f".{token}-", dir=out_root))
        try:
            for rel, text in fileset.files.items():
                dest = staging / rel
                dest.parent.mkdir(parents=True, exist_ok=True)
                dest.write_text(text, encoding="utf-8")
        except Exception:
            shutil.rmtree(staging, ignore_errors=True)
            raise
        final = out_root / token
        if final.exists():
            shutil.rmtree(final)
        staging.rename(final)
        written.extend(f"{token}/{rel}" for rel in fileset.files)
    for line in sorted(written):
        print(line)
    return EXIT_OK


def cmd_targets(args: argparse.Namespace) -> int:
    profiles_dir = default_profiles_dir()
    for token in available_tokens(profiles_dir):
        profile = load_profile(token, profiles_dir)
        flag = "implemented" if token in IMPLEMENTED_TOKENS else "data-only"
        print(f"{token}  {profile.construct.value}  {flag}")
    return EXIT_OK


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knowforge",
        description="Compile an OWL ontology in Turtle into per-language SDK trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_parse = sub.add_parser("parse", help="parse Turtle and print canonical N-Triples")
    p_parse.add_argument("input")
    p_parse.add_argument("--base", default=DEFAULT_BASE)
    p_parse.set_defaults(func=cmd_parse)

    p_validate = sub.add_parser("validate", help="report model diagnostics")
    p_validate.add_argument("input")
    p_validate.add_argument("--base", default=DEFAULT_BASE)
    p_validate.set_defaults(func=cmd_validate)

    p_generate = sub.add_parser("generate", help="emit SDK source trees")
    p_generate.add_argument("input")
    p_generate.add_argument("--base", default=DEFAULT_BASE)
    p_generate.add_argument(
        "--target", action="append", required=True, metavar="TOKEN",
        help="profile token, repeatable; 'all' expands to every implemented profile",
    )
    p_generate.add_argument("--out", required=True)
    p_generate.set_defaults(func=cmd_generate)

    p_targets = sub.add_parser("targets", help="list profile tokens")
    p_targets.set_defaults(func=cmd_targets)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
