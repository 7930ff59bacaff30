import random

import pytest

from knowforge.model import (
    Severity,
    UnknownClassError,
    ancestors,
    build_model,
    effective_properties,
    validate,
)
from knowforge.rdf import Graph, Iri, parse_turtle
from knowforge.vocab import KNOW_BASE, bundled_source

OWL = "http://www.w3.org/2002/07/owl#"
PREFIXES = (
    "@prefix know: <https://know.dev/> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
)


def _build(turtle: str):
    return build_model(parse_turtle(PREFIXES + turtle), KNOW_BASE)


def know(name: str) -> Iri:
    return Iri("https://know.dev/" + name)


def test_minimal_class():
    m = _build("know:Person a owl:Class .\n")
    assert set(m.classes) == {know("Person")}
    assert m.classes[know("Person")].superclasses == []
    assert m.properties == {}


def test_fixture_class_inventory(model):
    assert len(model.classes) == 17
    top = {c.local_name for c in model.classes.values() if not c.superclasses}
    assert top == {"Person", "Group", "Organization", "Place", "Event"}
    place_subs = {
        c.local_name
        for c in model.classes.values()
        if know("Place") in c.superclasses
    }
    assert place_subs == {
        "Landmark", "PlaceOfWorship", "Airport", "Cafe", "Hospital", "Hotel",
        "Restaurant",
    }
    event_subs = {
        c.local_name
        for c in model.classes.values()
        if know("Event") in c.superclasses
    }
    assert event_subs == {"Birthday", "Appointment", "Holiday", "Meeting", "Party"}


def test_fixture_father_property(model):
    father = model.properties[know("father")]
    assert father.super_properties == [know("parent")]
    assert father.functional is True
    assert father.domains == [know("Person")]
    assert father.ranges == [know("Person")]


def test_fixture_inverse_pair(model):
    assert model.properties[know("parent")].inverse_of == know("child")
    assert model.properties[know("child")].inverse_of == know("parent")


def test_union_domain_flattened():
    m = _build(
        "know:Person a owl:Class .\n"
        "know:Group a owl:Class .\n"
        "know:label a owl:DatatypeProperty ;\n"
        "  rdfs:domain [ owl:unionOf ( know:Person know:Group ) ] ;\n"
        "  rdfs:range xsd:string .\n"
    )
    assert m.properties[know("label")].domains == [know("Group"), know("Person")]


def test_validate_fixture_clean(model):
    assert validate(model) == []


def test_validate_cycle():
    m = _build(
        "know:A a owl:Class ; rdfs:subClassOf know:B .\n"
        "know:B a owl:Class ; rdfs:subClassOf know:A .\n"
    )
    diags = [d for d in validate(m) if d.code == "CYCLE"]
    assert len(diags) == 1
    assert diags[0].severity is Severity.ERROR
    assert "https://know.dev/A" in diags[0].message
    assert "https://know.dev/B" in diags[0].message


def test_validate_dangling_range():
    m = _build(
        "know:Person a owl:Class .\n"
        "know:pet a owl:ObjectProperty ; rdfs:domain know:Person ;\n"
        "  rdfs:range know:Animal .\n"
    )
    codes = {d.code for d in validate(m)}
    assert "DANGLING_RANGE" in codes


def test_validate_no_domain_warning():
    m = _build(
        "know:Person a owl:Class .\n"
        "know:stray a owl:DatatypeProperty ; rdfs:range xsd:string .\n"
    )
    diags = [d for d in validate(m) if d.code == "NO_DOMAIN"]
    assert len(diags) == 1
    assert diags[0].severity is Severity.WARNING


def test_validate_naming_warning():
    m = _build("know:place_Of_worship a owl:Class .\n")
    diags = [d for d in validate(m) if d.code == "NAMING"]
    assert len(diags) == 1
    assert diags[0].severity is Severity.WARNING


def test_validate_dangling_inverse_and_superprop():
    m = _build(
        "know:Person a owl:Class .\n"
        "know:p a owl:ObjectProperty ; rdfs:domain know:Person ;\n"
        "  rdfs:range know:Person ; owl:inverseOf know:q ;\n"
        "  rdfs:subPropertyOf know:r .\n"
    )
    codes = {d.code for d in validate(m)}
    assert {"DANGLING_INVERSE", "DANGLING_SUPERPROP"} <= codes


def test_validate_duplicate_local_name():
    graph = parse_turtle(
        PREFIXES
        + "@prefix other: <https://other.example/ns#> .\n"
        + "know:Person a owl:Class .\n"
        + "other:Person a owl:Class .\n"
    )
    m = build_model(graph, KNOW_BASE)
    codes = {d.code for d in validate(m)}
    assert "DUPLICATE_LOCAL_NAME" in codes


def test_diagnostics_sorted_errors_first():
    m = _build(
        "know:b_ad a owl:Class .\n"
        "know:A a owl:Class ; rdfs:subClassOf know:B .\n"
        "know:B a owl:Class ; rdfs:subClassOf know:A .\n"
    )
    diags = validate(m)
    severities = [d.severity.value for d in diags]
    assert severities == sorted(severities)


def test_ancestors_person_empty(model):
    assert ancestors(model, know("Person")) == []


def test_ancestors_cafe(model):
    assert ancestors(model, know("Cafe")) == [know("Place")]


def test_ancestors_unknown(model):
    with pytest.raises(UnknownClassError):
        ancestors(model, know("Nothing"))


def test_ancestors_transitive_order():
    m = _build(
        "know:A a owl:Class .\n"
        "know:B a owl:Class ; rdfs:subClassOf know:A .\n"
        "know:C a owl:Class ; rdfs:subClassOf know:B .\n"
    )
    assert ancestors(m, know("C")) == [know("B"), know("A")]


def test_effective_properties_person(model):
    props = [p.local_name for p in effective_properties(model, know("Person"))]
    assert props == [
        "age", "aunt", "brother", "child", "father", "mother", "name",
        "nephew", "niece", "parent", "sibling", "sister", "uncle",
    ]


def test_effective_properties_group_empty(model):
    assert effective_properties(model, know("Group")) == []


def test_effective_properties_inherited_only(model):
    assert effective_properties(model, know("Cafe")) == effective_properties(
        model, know("Place")
    )


def test_effective_properties_monotone(model):
    for cls in model.classes.values():
        for parent in cls.superclasses:
            child_set = {p.iri for p in effective_properties(model, cls.iri)}
            parent_set = {p.iri for p in effective_properties(model, parent)}
            assert parent_set <= child_set


def test_build_model_order_insensitive(model):
    graph = parse_turtle(bundled_source())
    rng = random.Random(20240826)
    for _ in range(100):
        shuffled = list(graph.triples)
        rng.shuffle(shuffled)
        permuted = Graph(triples=shuffled, prefixes=graph.prefixes, base=graph.base)
        assert build_model(permuted, KNOW_BASE) == model


def test_fixture_mappings_external(model):
    entities = list(model.classes.values()) + list(model.properties.values())
    mapped = [e for e in entities if e.mappings]
    assert mapped
    for entity in mapped:
        for target in entity.mappings:
            assert not target.value.startswith(KNOW_BASE.value)
