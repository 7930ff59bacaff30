import pytest

from knowforge.ir import (
    Cardinality,
    Construct,
    EntityRef,
    ScalarKind,
    TargetProfile,
    UnknownProfileError,
    UnsupportedDatatypeError,
    available_tokens,
    build_ir,
    load_profile,
    map_scalar,
)
from knowforge.model import build_model
from knowforge.naming import NamingConvention, apply_convention, split_words
from knowforge.rdf import XSD_NS, Iri, parse_turtle
from knowforge.vocab import KNOW_BASE, bundled_model


def know(name: str) -> Iri:
    return Iri("https://know.dev/" + name)


@pytest.mark.parametrize(
    "suffix,kind",
    [
        ("string", ScalarKind.TEXT),
        ("integer", ScalarKind.INTEGER),
        ("int", ScalarKind.INTEGER),
        ("long", ScalarKind.INTEGER),
        ("decimal", ScalarKind.DECIMAL),
        ("double", ScalarKind.DECIMAL),
        ("float", ScalarKind.DECIMAL),
        ("boolean", ScalarKind.BOOLEAN),
        ("date", ScalarKind.DATE),
        ("dateTime", ScalarKind.DATETIME),
        ("anyURI", ScalarKind.IRI),
    ],
)
def test_map_scalar(suffix, kind):
    assert map_scalar(Iri(XSD_NS + suffix)) is kind


def test_map_scalar_unsupported():
    with pytest.raises(UnsupportedDatatypeError):
        map_scalar(Iri("https://example.org/custom"))


def test_all_twelve_profiles_load():
    tokens = available_tokens()
    assert tokens == [
        "c", "cpp", "csharp", "dart", "go", "java", "js", "py", "rb", "rs",
        "swift", "ts",
    ]
    for token in tokens:
        profile = load_profile(token)
        assert profile.name == token
        for kind in ScalarKind:
            assert profile.scalar(kind)


def test_unknown_profile():
    with pytest.raises(UnknownProfileError):
        load_profile("cobol")


def test_record_profiles_flatten():
    for token in ("c",):
        profile = load_profile(token)
        assert profile.construct is Construct.RECORD
        assert profile.flatten_inheritance


def test_expected_construct_kinds():
    assert load_profile("rs").construct is Construct.TRAIT_RECORD
    assert load_profile("swift").construct is Construct.INTERFACE_RECORD
    assert load_profile("ts").construct is Construct.INTERFACE_RECORD
    assert load_profile("py").construct is Construct.CLASS_LIKE
    assert load_profile("js").construct is Construct.DYNAMIC


def test_build_ir_empty_model():
    model = build_model(parse_turtle(""), KNOW_BASE)
    assert build_ir(model, load_profile("py")) == []


def test_build_ir_person_fields(model):
    ir = build_ir(model, load_profile("py"))
    person = next(s for s in ir if s.class_iri == know("Person"))
    assert len(person.own_fields) == 13
    by_name = {"_".join(f.words.words): f for f in person.own_fields}
    assert by_name["father"].cardinality is Cardinality.OPTIONAL_SINGLE
    assert by_name["brother"].cardinality is Cardinality.MANY
    assert by_name["age"].value is ScalarKind.INTEGER
    assert by_name["brother"].value == EntityRef(know("Person"))


def test_build_ir_flattened_record_profile(model):
    ir = build_ir(model, load_profile("c"))
    cafe = next(s for s in ir if s.class_iri == know("Cafe"))
    assert cafe.parent is None
    assert cafe.all_fields == ()  # Place declares no fields


def test_build_ir_class_like_keeps_parent(model):
    ir = build_ir(model, load_profile("py"))
    cafe = next(s for s in ir if s.class_iri == know("Cafe"))
    assert cafe.parent == know("Place")


def test_build_ir_topological_order(model):
    for token in ("py", "c"):
        ir = build_ir(model, load_profile(token))
        position = {s.class_iri: i for i, s in enumerate(ir)}
        # brute-force edge check over every subclass edge
        for cls in model.classes.values():
            for parent in cls.superclasses:
                assert position[parent] < position[cls.iri]


def test_flattened_field_counts(model):
    from knowforge.model import ancestors

    ir = build_ir(model, load_profile("c"))
    for spec in ir:
        lineage = [spec.class_iri] + ancestors(model, spec.class_iri)
        expected = sum(
            1
            for prop in model.properties.values()
            for c in lineage
            if c in prop.domains
        )
        assert len(spec.all_fields) == expected


def test_pascal_fixed_point_on_fixture_names(model):
    for cls in model.classes.values():
        words = split_words(cls.local_name)
        assert apply_convention(words, NamingConvention.PASCAL) == cls.local_name


def test_unsupported_datatype_names_property():
    prefix = (
        "@prefix know: <https://know.dev/> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    )
    model = build_model(
        parse_turtle(
            prefix
            + "know:Person a owl:Class .\n"
            + "know:weird a owl:DatatypeProperty ; rdfs:domain know:Person ;\n"
            + "  rdfs:range <https://example.org/custom> .\n"
        ),
        KNOW_BASE,
    )
    with pytest.raises(UnsupportedDatatypeError) as exc:
        build_ir(model, load_profile("py"))
    assert "weird" in str(exc.value)


def test_profile_templates():
    profile = load_profile("py")
    assert profile.optional("int") == "Optional[int]"
    assert profile.collection("str") == "list[str]"


def test_repo_profiles_match_packaged(repo_root):
    from knowforge.ir import default_profiles_dir

    packaged = default_profiles_dir()
    for path in sorted((repo_root / "profiles").glob("*.json")):
        assert (packaged / path.name).read_text() == path.read_text()
