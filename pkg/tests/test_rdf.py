import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knowforge.rdf import (
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_INTEGER,
    BlankNode,
    Iri,
    Literal,
    RelativeIriError,
    Triple,
    TurtleSyntaxError,
    UndefinedPrefixError,
    parse_turtle,
    to_ntriples,
)

OWL_CLASS = "http://www.w3.org/2002/07/owl#Class"


def test_single_prefixed_statement():
    text = (
        "@prefix know: <https://know.dev/> .\n"
        f"know:Person a <{OWL_CLASS}> .\n"
    )
    g = parse_turtle(text)
    assert g.triples == [
        Triple(Iri("https://know.dev/Person"), Iri(RDF_TYPE), Iri(OWL_CLASS))
    ]
    assert g.prefixes == {"know": Iri("https://know.dev/")}


def test_empty_document():
    g = parse_turtle("")
    assert g.triples == []
    assert g.prefixes == {}


def test_object_list_shares_subject_and_predicate():
    text = (
        "@prefix know: <https://know.dev/> .\n"
        "know:x know:brother know:y , know:z .\n"
    )
    g = parse_turtle(text)
    assert len(g.triples) == 2
    assert {t.subject for t in g.triples} == {Iri("https://know.dev/x")}
    assert {t.predicate for t in g.triples} == {Iri("https://know.dev/brother")}
    assert [t.object for t in g.triples] == [
        Iri("https://know.dev/y"),
        Iri("https://know.dev/z"),
    ]


def test_undefined_prefix_reports_location():
    text = "@prefix know: <https://know.dev/> .\nknow:Person a owl:Class .\n"
    with pytest.raises(UndefinedPrefixError) as exc:
        parse_turtle(text)
    assert exc.value.label == "owl"
    assert exc.value.location.line == 2
    assert exc.value.location.column == text.splitlines()[1].index("owl:Class") + 1


def test_predicate_list_and_literals():
    text = (
        "@prefix ex: <http://ex.org/> .\n"
        'ex:s ex:age 30 ; ex:rate 1.5 ; ex:ok true ; ex:name "Ada"@en ; ex:note "x" .\n'
    )
    g = parse_turtle(text)
    objs = {t.predicate.value.rsplit("/", 1)[1]: t.object for t in g.triples}
    assert objs["age"] == Literal("30", Iri(XSD_INTEGER))
    assert objs["rate"] == Literal("1.5", Iri(XSD_DECIMAL))
    assert objs["ok"] == Literal("true", Iri(XSD_BOOLEAN))
    assert objs["name"].language == "en"
    assert objs["note"] == Literal("x")


def test_base_resolution_and_sparql_directives():
    text = (
        "BASE <https://know.dev/>\n"
        "PREFIX ex: <sub/>\n"
        "<Person> a <Klass> .\n"
        "ex:thing a <Klass> .\n"
    )
    g = parse_turtle(text)
    assert g.triples[0].subject == Iri("https://know.dev/Person")
    assert g.triples[1].subject == Iri("https://know.dev/sub/thing")


def test_relative_iri_without_base():
    with pytest.raises(RelativeIriError):
        parse_turtle("<Person> a <Klass> .\n")


def test_explicit_base_argument():
    g = parse_turtle("<Person> a <Klass> .\n", base=Iri("https://know.dev/"))
    assert g.triples[0].subject == Iri("https://know.dev/Person")


def test_blank_node_property_list_labels_deterministic():
    text = (
        "@prefix ex: <http://ex.org/> .\n"
        "ex:s ex:p [ ex:q ex:o ] .\n"
        "ex:t ex:p [ ex:q ex:o ] .\n"
    )
    g1 = parse_turtle(text)
    g2 = parse_turtle(text)
    assert g1.triples == g2.triples
    blanks = [t.object for t in g1.triples if isinstance(t.object, BlankNode)]
    assert [b.label for b in blanks] == ["b0", "b1"]


def test_anonymous_labels_avoid_explicit_ones():
    text = (
        "@prefix ex: <http://ex.org/> .\n"
        "_:b0 ex:p ex:o .\n"
        "ex:s ex:p [ ex:q ex:o ] .\n"
    )
    g = parse_turtle(text)
    labels = {t.subject.label for t in g.triples if isinstance(t.subject, BlankNode)}
    assert "b0" in labels and "b1" in labels


def test_collection_expansion():
    text = "@prefix ex: <http://ex.org/> .\nex:s ex:p ( ex:a ex:b ) .\n"
    g = parse_turtle(text)
    # 1 statement triple + 2 first/rest pairs
    assert len(g.triples) == 5
    firsts = [t.object for t in g.triples if t.predicate.value.endswith("#first")]
    assert firsts == [Iri("http://ex.org/a"), Iri("http://ex.org/b")]


def test_empty_collection_is_nil():
    g = parse_turtle("@prefix ex: <http://ex.org/> .\nex:s ex:p ( ) .\n")
    assert len(g.triples) == 1
    assert g.triples[0].object.value.endswith("#nil")


def test_syntax_error_has_location():
    with pytest.raises(TurtleSyntaxError) as exc:
        parse_turtle("@prefix ex: <http://ex.org/> .\nex:s ex:p .\n")
    assert exc.value.location.line == 2


def test_comments_and_long_strings():
    text = (
        "@prefix ex: <http://ex.org/> . # prefix\n"
        'ex:s ex:p """line1\nline2""" . # done\n'
    )
    g = parse_turtle(text)
    assert g.triples[0].object.lexical == "line1\nline2"


def test_string_escapes():
    g = parse_turtle('@prefix ex: <http://ex.org/> .\nex:s ex:p "a\\t\\"b\\"\\u0041" .\n')
    assert g.triples[0].object.lexical == 'a\t"b"A'


def test_to_ntriples_single_triple():
    g = parse_turtle(
        "@prefix know: <https://know.dev/> .\n"
        f"know:Person a <{OWL_CLASS}> .\n"
    )
    assert to_ntriples(g) == (
        "<https://know.dev/Person> "
        "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
        "<http://www.w3.org/2002/07/owl#Class> .\n"
    )


def test_to_ntriples_empty_graph():
    assert to_ntriples(parse_turtle("")) == ""


def test_to_ntriples_sorted_and_escaped():
    text = (
        "@prefix ex: <http://ex.org/> .\n"
        'ex:z ex:p "tab\\there" .\n'
        "ex:a ex:p ex:o .\n"
    )
    out = to_ntriples(parse_turtle(text))
    lines = out.splitlines()
    assert lines == sorted(lines)
    assert '"tab\\there"' in out


# --- properties -------------------------------------------------------------

_LOCAL = st.from_regex(r"[A-Za-z][A-Za-z0-9]{0,6}", fullmatch=True)
_SCALARS = st.one_of(
    st.integers(min_value=-10**6, max_value=10**6).map(lambda n: str(n)),
    st.booleans().map(lambda b: "true" if b else "false"),
    # No space/';'/','/'.' so the brute-force statement counter stays valid.
    st.text(alphabet='abzAZ09_\t\\"é漢\n', max_size=8)
    .map(lambda s: '"' + s.replace("\\", "\\\\").replace('"', '\\"')
         .replace("\n", "\\n").replace("\t", "\\t") + '"'),
)
_OBJECT = st.one_of(_LOCAL.map(lambda l: f"ex:{l}"), _SCALARS)
_STATEMENT = st.tuples(
    _LOCAL,
    st.lists(st.tuples(_LOCAL, st.lists(_OBJECT, min_size=1, max_size=3)),
             min_size=1, max_size=3),
)


@st.composite
def turtle_documents(draw) -> str:
    statements = draw(st.lists(_STATEMENT, min_size=0, max_size=5))
    lines = ["@prefix ex: <http://example.org/ns#> ."]
    for subj, po_list in statements:
        parts = [f"ex:{subj}"]
        rendered = [
            f"ex:{pred} " + " , ".join(objs) for pred, objs in po_list
        ]
        parts.append(" ; ".join(rendered))
        lines.append(" ".join(parts) + " .")
    return "\n".join(lines) + "\n"


@settings(max_examples=150, deadline=None)
@given(turtle_documents())
def test_parse_serialize_parse_fixpoint(doc):
    first = to_ntriples(parse_turtle(doc))
    second = to_ntriples(parse_turtle(first))
    assert second == first


@settings(max_examples=150, deadline=None)
@given(turtle_documents())
def test_parse_is_deterministic(doc):
    assert parse_turtle(doc) == parse_turtle(doc)


@settings(max_examples=100, deadline=None)
@given(turtle_documents())
def test_triple_count_matches_statement_expansion(doc):
    expected = 0
    for line in doc.splitlines():
        if line.startswith("@") or not line.strip():
            continue
        body = line.rstrip(" .")
        body = body.split(" ", 1)[1]
        for group in body.split(" ; "):
            expected += group.count(" , ") + 1
    assert len(parse_turtle(doc).triples) == expected
