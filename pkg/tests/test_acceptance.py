"""End-to-end acceptance gate.

Each test covers one release criterion and prints a single PASS/FAIL line
(run with ``pytest -s`` to see them inline). Every check here goes through
public entry points only: the CLI, the model builder, the emitters, and
the committed artifacts.
"""

import filecmp
import functools
import json
import random
import string
import subprocess
import sys

import pytest

from knowforge.cli import main as cli_main
from knowforge.emit import InstanceRecord, instance_to_json, instance_to_triples
from knowforge.model import build_model, effective_properties, validate
from knowforge.naming import (
    NamingConvention,
    WordSequence,
    apply_convention,
    split_words,
)
from knowforge.rdf import Graph, Iri, parse_turtle, to_ntriples
from knowforge.vocab import bundled_model, bundled_source

from _support import load_generated_sdk
from test_selfhost import make_pair

IMPLEMENTED = ("c", "go", "py", "rs", "ts")


def criterion(name):
    def deco(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL {name}")
                raise
            print(f"PASS {name}")
        return run
    return deco


def run_cli(capsys, *argv):
    try:
        code = cli_main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


@criterion("fixture integrity")
def test_fixture_integrity(capsys, repo_root, model):
    code, out, err = run_cli(capsys, "validate", str(repo_root / "vocab" / "know.ttl"))
    assert code == 0
    assert not any(line.startswith("error ") for line in out.splitlines())
    assert len(model.classes) == 17
    top = sorted(
        cls.iri.value.rsplit("/", 1)[-1]
        for cls in model.classes.values()
        if not cls.superclasses
    )
    assert top == ["Event", "Group", "Organization", "Person", "Place"]
    props = sorted(p.iri.value.rsplit("/", 1)[-1] for p in model.properties.values())
    kinship = [
        "aunt", "brother", "child", "father", "mother", "nephew",
        "niece", "parent", "sibling", "sister", "uncle",
    ]
    assert props == sorted(kinship + ["age", "name"])


def random_mini_document(rng):
    """A small Turtle document hitting prefixes, `;`/`,` lists, literals,
    blank-node property lists, and collections."""
    def pname():
        return "ex:" + rng.choice(string.ascii_lowercase) + str(rng.randrange(50))

    def obj(depth):
        roll = rng.random()
        if roll < 0.3:
            return pname()
        if roll < 0.5:
            return str(rng.randrange(-99, 99))
        if roll < 0.7:
            text = rng.choice(["hi", "a b", 'q\\"t', "é漢", ""])
            return f'"{text}"' + rng.choice(["", "@en", "^^xsd:date"])
        if roll < 0.85 and depth < 2:
            return "[ " + pname() + " " + obj(depth + 1) + " ]"
        if depth < 2:
            items = " ".join(obj(depth + 1) for _ in range(rng.randrange(0, 3)))
            return f"( {items} )"
        return "true" if rng.random() < 0.5 else "4.25"

    lines = [
        "@prefix ex: <http://example.org/ns#> .",
        "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .",
    ]
    for _ in range(rng.randrange(1, 5)):
        preds = []
        for _ in range(rng.randrange(1, 3)):
            objects = ", ".join(obj(0) for _ in range(rng.randrange(1, 3)))
            preds.append(rng.choice(["a", pname()]) + " " + objects)
        lines.append(pname() + " " + " ;\n    ".join(preds) + " .")
    return "\n".join(lines) + "\n"


@criterion("parser canonicalization")
def test_parser_canonicalization(capsys, repo_root):
    code, out, _ = run_cli(capsys, "parse", str(repo_root / "vocab" / "know.ttl"))
    assert code == 0
    assert out == (repo_root / "vocab" / "know.nt").read_text(encoding="utf-8")

    rng = random.Random(9001)
    for _ in range(120):
        doc = random_mini_document(rng)
        canonical = to_ntriples(parse_turtle(doc))
        assert to_ntriples(parse_turtle(canonical)) == canonical


@criterion("naming properties")
def test_naming_properties(model):
    for cls in model.classes.values():
        local = cls.iri.value.rsplit("/", 1)[-1]
        assert apply_convention(split_words(local), NamingConvention.PASCAL) == local

    rng = random.Random(424242)
    full = string.ascii_lowercase
    tail = string.ascii_lowercase + string.digits

    def word(prefix_len):
        head = "".join(rng.choice(full) for _ in range(prefix_len))
        return head + "".join(rng.choice(tail) for _ in range(rng.randrange(0, 6)))

    cases = 0
    for _ in range(300):
        # camel and pascal concatenation is only invertible when every
        # word starts with at least two letters, so those two conventions
        # run on that narrower domain
        loose = WordSequence(tuple(word(1) for _ in range(rng.randrange(1, 5))))
        strict = WordSequence(tuple(word(2) for _ in range(rng.randrange(1, 5))))
        for conv in (NamingConvention.LOWER_SNAKE, NamingConvention.KEBAB):
            assert split_words(apply_convention(loose, conv)) == loose
            cases += 1
        for conv in (NamingConvention.CAMEL, NamingConvention.PASCAL):
            assert split_words(apply_convention(strict, conv)) == strict
            cases += 1
    assert cases >= 1000


@criterion("model properties")
def test_model_properties(model):
    assert not validate(model)

    for cls in model.classes.values():
        inherited = effective_properties(model, cls.iri)
        for sup in cls.superclasses:
            if sup in model.classes:
                sup_props = {p.iri for p in effective_properties(model, sup)}
                sub_props = {p.iri for p in inherited}
                assert sup_props <= sub_props

    base = Iri("https://know.dev/")
    graph = parse_turtle(bundled_source())
    baseline = build_model(graph, base)
    rng = random.Random(20260826)
    for _ in range(100):
        triples = list(graph.triples)
        rng.shuffle(triples)
        shuffled = Graph(triples=triples, prefixes=graph.prefixes, base=graph.base)
        assert build_model(shuffled, base) == baseline


@criterion("generation determinism and goldens")
def test_generation_determinism(capsys, tmp_path, repo_root):
    ttl = str(repo_root / "vocab" / "know.ttl")
    for name in ("a", "b"):
        code, _, _ = run_cli(
            capsys, "generate", ttl, "--target", "all", "--out", str(tmp_path / name)
        )
        assert code == 0
    for token in IMPLEMENTED:
        for other in (tmp_path / "b" / token, repo_root / "golden" / token):
            cmp = filecmp.dircmp(tmp_path / "a" / token, other)
            assert not cmp.diff_files and not cmp.left_only and not cmp.right_only

    py_person = (tmp_path / "a" / "py" / "person.py").read_text(encoding="utf-8")
    assert "FieldDef('age', 'age', 'https://know.dev/age', 'integer', False)" in py_person
    assert "FieldDef('father', 'father', 'https://know.dev/father', 'ref', False)" in py_person
    assert "FieldDef('brother', 'brother', 'https://know.dev/brother', 'ref', True)" in py_person
    ts_person = (tmp_path / "a" / "ts" / "person.ts").read_text(encoding="utf-8")
    assert "age: number | null;" in ts_person
    assert "father: string | null;" in ts_person
    assert "brother: string[];" in ts_person


@criterion("self-hosted round-trip")
def test_self_hosted_roundtrip(repo_root, model):
    from test_emit import regroup_triples

    sdk = load_generated_sdk(repo_root / "golden" / "py")
    rng = random.Random(77)
    for index in range(20):
        entity, record = make_pair(sdk, rng, index)
        text = entity.to_json_text()
        assert type(entity).from_json_text(text) == entity
        assert text == instance_to_json(record, model)
        rebuilt = regroup_triples(entity.to_ntriples(), model)
        normalized = InstanceRecord(
            id=record.id,
            type=record.type,
            values={k: sorted(v, key=repr) for k, v in record.values.items()},
        )
        assert rebuilt == normalized


@criterion("reference serialization oracle")
def test_reference_serialization_oracle(model):
    alice = InstanceRecord(
        id=Iri("https://example.org/people/alice"),
        type=Iri("https://know.dev/Person"),
        values={
            Iri("https://know.dev/age"): [30],
            Iri("https://know.dev/brother"): [
                Iri("https://example.org/people/bob"),
                Iri("https://example.org/people/carl"),
            ],
        },
    )
    lines = instance_to_triples(alice, model).splitlines()
    assert len(lines) == 4
    assert lines == sorted(lines)

    text = instance_to_json(alice, model)
    assert text == json.dumps(json.loads(text), indent=2, ensure_ascii=False) + "\n"
    assert list(json.loads(text)) == ["id", "type", "age", "brother"]


@criterion("smoke interoperability")
def test_smoke_interoperability(repo_root):
    done = subprocess.run(
        [
            sys.executable,
            str(repo_root / "smoke" / "run"),
            str(repo_root / "golden" / "py"),
            str(repo_root / "smoke" / "cases"),
        ],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0, done.stdout + done.stderr
    statuses = [line.split()[0] for line in done.stdout.splitlines()]
    assert statuses and set(statuses) == {"PASS"}
