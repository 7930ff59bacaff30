import json
import re

import pytest

from knowforge.emit import (
    CardinalityViolationError,
    FileSet,
    InstanceRecord,
    NotImplementedProfileError,
    UnknownPropertyError,
    emit,
    instance_from_json,
    instance_to_json,
    instance_to_triples,
)
from knowforge.ir import build_ir, load_profile
from knowforge.model import build_model
from knowforge.rdf import Iri, parse_turtle
from knowforge.vocab import KNOW_BASE

DATA = "https://know-data.example/"


def know(name: str) -> Iri:
    return Iri("https://know.dev/" + name)


def data(name: str) -> Iri:
    return Iri(DATA + name)


@pytest.fixture()
def alice():
    return InstanceRecord(
        id=data("alice"),
        type=know("Person"),
        values={
            know("age"): [30],
            know("brother"): [data("bob"), data("carl")],
        },
    )


def test_fileset_rejects_escaping_paths():
    with pytest.raises(ValueError):
        FileSet({"../evil.py": ""})
    with pytest.raises(ValueError):
        FileSet({"/abs.py": ""})


def test_fileset_sorted_iteration():
    fs = FileSet({"b.py": "x\n", "a.py": "y\n"})
    assert list(fs.files) == ["a.py", "b.py"]


def test_emit_empty_ir_manifest_only():
    profile = load_profile("c")
    fs = emit([], profile)
    assert list(fs.files) == ["know.h"]


def test_emit_not_implemented():
    profile = load_profile("java")
    with pytest.raises(NotImplementedProfileError):
        emit([], profile)


def test_emit_deterministic(model):
    for token in ("c", "go", "py", "rs", "ts"):
        profile = load_profile(token)
        ir = build_ir(model, profile)
        assert emit(ir, profile).files == emit(ir, profile).files


def test_emitted_files_end_with_single_newline(model):
    for token in ("c", "go", "py", "rs", "ts"):
        profile = load_profile(token)
        fs = emit(build_ir(model, profile), profile)
        for text in fs.files.values():
            assert text.endswith("\n")
            assert not text.endswith("\n\n")
            text.encode("utf-8")


_MANIFESTS = {
    "c": "know.h",
    "go": "types.go",
    "py": "__init__.py",
    "rs": "lib.rs",
    "ts": "index.ts",
}


def test_manifest_lists_types_sorted(model):
    for token, manifest_path in _MANIFESTS.items():
        profile = load_profile(token)
        ir = build_ir(model, profile)
        manifest = emit(ir, profile).files[manifest_path]
        names = sorted(
            "".join(w.capitalize() for w in spec.words.words) for spec in ir
        )
        positions = []
        for name in names:
            matches = [m.start() for m in re.finditer(rf"\b{name}\b", manifest)]
            assert matches, f"{name} missing from {token} manifest"
            positions.append(matches[0])
        assert positions == sorted(positions), f"{token} manifest not sorted"


def test_c_person_golden_content(model):
    profile = load_profile("c")
    fs = emit(build_ir(model, profile), profile)
    person = fs.files["person.h"]
    assert "long long* age; /* optional */" in person
    assert "size_t brother_count;" in person
    assert len([p for p in fs.files if p != "know.h"]) == 17


def test_ts_person_interface_and_record(model):
    profile = load_profile("ts")
    fs = emit(build_ir(model, profile), profile)
    person = fs.files["person.ts"]
    assert "export interface Person" in person
    assert "export class PersonRecord" in person
    assert "age: number | null" in person
    assert "father: string | null" in person
    assert "brother: string[]" in person


def test_py_person_cardinality(model):
    profile = load_profile("py")
    fs = emit(build_ir(model, profile), profile)
    person = fs.files["person.py"]
    assert "FieldDef('age', 'age', 'https://know.dev/age', 'integer', False)" in person
    assert "FieldDef('father', 'father', 'https://know.dev/father', 'ref', False)" in person
    assert "FieldDef('brother', 'brother', 'https://know.dev/brother', 'ref', True)" in person


def test_rs_trait_and_record(model):
    profile = load_profile("rs")
    fs = emit(build_ir(model, profile), profile)
    person = fs.files["person.rs"]
    assert "pub trait Person" in person
    assert "pub struct PersonRecord" in person
    assert "pub age: Option<i64>," in person
    assert "pub brother: Vec<String>," in person


def test_go_interface_and_record(model):
    profile = load_profile("go")
    fs = emit(build_ir(model, profile), profile)
    person = fs.files["person.go"]
    assert "type Person interface" in person
    assert "type PersonRecord struct" in person
    assert "Age *int64" in person
    assert "Brother []string" in person


def test_committed_goldens_match(model, repo_root):
    for token in ("c", "go", "py", "rs", "ts"):
        profile = load_profile(token)
        fs = emit(build_ir(model, profile), profile)
        golden_dir = repo_root / "golden" / token
        committed = {
            str(p.relative_to(golden_dir)): p.read_text(encoding="utf-8")
            for p in golden_dir.rglob("*")
            if p.is_file() and "__pycache__" not in p.parts
        }
        assert fs.files == committed, f"golden drift for {token}"


# --- reference codecs --------------------------------------------------------


def test_instance_to_json_alice(alice, model):
    text = instance_to_json(alice, model)
    assert text == (
        "{\n"
        f'  "id": "{DATA}alice",\n'
        '  "type": "https://know.dev/Person",\n'
        '  "age": 30,\n'
        '  "brother": [\n'
        f'    "{DATA}bob",\n'
        f'    "{DATA}carl"\n'
        "  ]\n"
        "}\n"
    )


def test_instance_to_json_matches_independent_formatter(alice, model):
    text = instance_to_json(alice, model)
    assert json.dumps(json.loads(text), indent=2, ensure_ascii=False) + "\n" == text
    assert list(json.loads(text)) == ["id", "type", "age", "brother"]


def test_instance_to_json_empty_values(model):
    rec = InstanceRecord(id=data("g"), type=know("Group"))
    assert instance_to_json(rec, model) == (
        "{\n"
        f'  "id": "{DATA}g",\n'
        '  "type": "https://know.dev/Group"\n'
        "}\n"
    )


def test_instance_to_json_unknown_property(model):
    rec = InstanceRecord(
        id=data("g"), type=know("Group"), values={know("age"): [3]}
    )
    with pytest.raises(UnknownPropertyError):
        instance_to_json(rec, model)


def test_instance_to_json_cardinality_violation(model):
    rec = InstanceRecord(
        id=data("a"), type=know("Person"), values={know("age"): [30, 31]}
    )
    with pytest.raises(CardinalityViolationError):
        instance_to_json(rec, model)


def test_reference_json_roundtrip(alice, model):
    assert instance_from_json(instance_to_json(alice, model), model) == alice


def test_instance_to_triples_alice(alice, model):
    text = instance_to_triples(alice, model)
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines == sorted(lines)
    assert (
        f"<{DATA}alice> <https://know.dev/age> "
        '"30"^^<http://www.w3.org/2001/XMLSchema#integer> .' in lines
    )
    assert f"<{DATA}alice> <https://know.dev/brother> <{DATA}bob> ." in lines


def test_instance_to_triples_empty(model):
    rec = InstanceRecord(id=data("g"), type=know("Group"))
    lines = instance_to_triples(rec, model).splitlines()
    assert len(lines) == 1
    assert "rdf-syntax-ns#type" in lines[0]


def regroup_triples(text: str, model) -> InstanceRecord:
    """Brute-force oracle: parse N-Triples and rebuild the instance record."""
    from knowforge.rdf import Literal, RDF_TYPE

    graph = parse_turtle(text)
    subjects = {t.subject for t in graph.triples}
    assert len(subjects) == 1
    subject = subjects.pop()
    type_iri = None
    values = {}
    for t in graph.triples:
        if t.predicate.value == RDF_TYPE:
            type_iri = t.object
            continue
        if isinstance(t.object, Literal):
            dt = t.object.datatype.value
            if dt.endswith("#integer"):
                value = int(t.object.lexical)
            elif dt.endswith("#boolean"):
                value = t.object.lexical == "true"
            else:
                value = t.object.lexical
        else:
            value = t.object
        values.setdefault(t.predicate, []).append(value)
    for k in values:
        values[k] = sorted(values[k], key=repr)
    return InstanceRecord(id=subject, type=type_iri, values=values)


def test_triples_regroup_roundtrip(alice, model):
    rebuilt = regroup_triples(instance_to_triples(alice, model), model)
    normalized = InstanceRecord(
        id=alice.id,
        type=alice.type,
        values={k: sorted(v, key=repr) for k, v in alice.values.items()},
    )
    assert rebuilt == normalized
