"""Semantic model of an OWL vocabulary: classes, properties, hierarchy, mappings.

Built from a parsed RDF graph; structural problems are reported by
``validate`` as diagnostics rather than raised during construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .naming import (
    InvalidIdentifierError,
    NamingConvention,
    apply_convention,
    split_words,
)
from .rdf import RDF_TYPE, XSD_NS, BlankNode, Graph, Iri, Literal, SourceLocation

RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
SKOS_NS = "http://www.w3.org/2004/02/skos/core#"

RDFS_CLASS = Iri(RDFS_NS + "Class")
RDFS_SUBCLASS_OF = Iri(RDFS_NS + "subClassOf")
RDFS_SUBPROPERTY_OF = Iri(RDFS_NS + "subPropertyOf")
RDFS_DOMAIN = Iri(RDFS_NS + "domain")
RDFS_RANGE = Iri(RDFS_NS + "range")
RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_COMMENT = Iri(RDFS_NS + "comment")

OWL_CLASS = Iri(OWL_NS + "Class")
OWL_OBJECT_PROPERTY = Iri(OWL_NS + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL_NS + "DatatypeProperty")
OWL_ANNOTATION_PROPERTY = Iri(OWL_NS + "AnnotationProperty")
OWL_FUNCTIONAL_PROPERTY = Iri(OWL_NS + "FunctionalProperty")
OWL_INVERSE_OF = Iri(OWL_NS + "inverseOf")
OWL_EQUIVALENT_CLASS = Iri(OWL_NS + "equivalentClass")
OWL_EQUIVALENT_PROPERTY = Iri(OWL_NS + "equivalentProperty")
OWL_UNION_OF = Iri(OWL_NS + "unionOf")
SKOS_EXACT_MATCH = Iri(SKOS_NS + "exactMatch")

_CLASS_TYPES = {OWL_CLASS, RDFS_CLASS}
_PROPERTY_TYPES = {
    OWL_OBJECT_PROPERTY,
    OWL_DATATYPE_PROPERTY,
    OWL_ANNOTATION_PROPERTY,
    Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#Property"),
}
_MAPPING_PREDICATES = {OWL_EQUIVALENT_CLASS, OWL_EQUIVALENT_PROPERTY, SKOS_EXACT_MATCH}


class UnknownClassError(KeyError):
    def __init__(self, iri: Iri):
        super().__init__(iri.value)
        self.iri = iri


@dataclass
class OntologyClass:
    iri: Iri
    local_name: str
    label: Optional[str] = None
    comment: Optional[str] = None
    superclasses: list[Iri] = field(default_factory=list)
    mappings: list[Iri] = field(default_factory=list)


@dataclass
class OntologyProperty:
    iri: Iri
    local_name: str
    label: Optional[str] = None
    comment: Optional[str] = None
    domains: list[Iri] = field(default_factory=list)
    ranges: list[Iri] = field(default_factory=list)
    functional: bool = False
    inverse_of: Optional[Iri] = None
    super_properties: list[Iri] = field(default_factory=list)
    mappings: list[Iri] = field(default_factory=list)


@dataclass
class OntologyModel:
    base: Iri
    classes: dict[Iri, OntologyClass] = field(default_factory=dict)
    properties: dict[Iri, OntologyProperty] = field(default_factory=dict)
    prefixes: dict[str, Iri] = field(default_factory=dict)


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: str
    message: str
    subject: Optional[Iri] = None
    location: Optional[SourceLocation] = None


DIAGNOSTIC_CODES = frozenset(
    {
        "CYCLE",
        "DANGLING_RANGE",
        "DANGLING_DOMAIN",
        "DANGLING_INVERSE",
        "DANGLING_SUPERPROP",
        "NO_DOMAIN",
        "NAMING",
        "DUPLICATE_LOCAL_NAME",
    }
)


def local_name_of(iri: Iri, base: Iri) -> str:
    """IRI tail after the ontology base; falls back to the last / or # segment."""
    if iri.value.startswith(base.value):
        tail = iri.value[len(base.value):]
        if tail:
            return tail
    for sep in ("#", "/"):
        if sep in iri.value:
            tail = iri.value.rsplit(sep, 1)[1]
            if tail:
                return tail
    return iri.value


def _flatten_union(graph_index: dict, term) -> list:
    """Expand an owl:unionOf blank node into its member list; non-union terms
    pass through as singletons."""
    if isinstance(term, BlankNode):
        members = graph_index.get((term, OWL_UNION_OF))
        if members:
            return _read_collection(graph_index, members[0])
    return [term]


def _read_collection(graph_index: dict, head) -> list:
    from .rdf import RDF_FIRST, RDF_NIL, RDF_REST

    items = []
    node = head
    while not (isinstance(node, Iri) and node.value == RDF_NIL):
        firsts = graph_index.get((node, Iri(RDF_FIRST)))
        rests = graph_index.get((node, Iri(RDF_REST)))
        if not firsts or not rests:
            break
        items.append(firsts[0])
        node = rests[0]
    return items


def build_model(graph: Graph, base: Iri) -> OntologyModel:
    """Fold class and property declarations out of the graph.

    The result is independent of triple order: all link lists are kept
    sorted by IRI.
    """
    index: dict = {}
    for t in graph.triples:
        index.setdefault((t.subject, t.predicate), []).append(t.object)

    model = OntologyModel(base=base, prefixes=dict(sorted(graph.prefixes.items())))

    rdf_type = Iri(RDF_TYPE)
    subjects = sorted(
        {t.subject for t in graph.triples if isinstance(t.subject, Iri)},
        key=lambda s: s.value,
    )
    for subj in subjects:
        types = set(index.get((subj, rdf_type), []))
        if types & _CLASS_TYPES:
            model.classes[subj] = OntologyClass(subj, local_name_of(subj, base))
        if types & _PROPERTY_TYPES:
            prop = OntologyProperty(subj, local_name_of(subj, base))
            prop.functional = OWL_FUNCTIONAL_PROPERTY in types
            model.properties[subj] = prop

    for subj, cls in model.classes.items():
        supers = {
            o for o in index.get((subj, RDFS_SUBCLASS_OF), [])
            if isinstance(o, Iri) and o != subj
        }
        cls.superclasses = sorted(supers)
        cls.mappings = _collect_mappings(index, subj)
        cls.label = _first_literal(index, subj, RDFS_LABEL)
        cls.comment = _first_literal(index, subj, RDFS_COMMENT)

    for subj, prop in model.properties.items():
        domains: set[Iri] = set()
        for o in index.get((subj, RDFS_DOMAIN), []):
            domains.update(x for x in _flatten_union(index, o) if isinstance(x, Iri))
        prop.domains = sorted(domains)
        ranges: set[Iri] = set()
        for o in index.get((subj, RDFS_RANGE), []):
            ranges.update(x for x in _flatten_union(index, o) if isinstance(x, Iri))
        prop.ranges = sorted(ranges)
        inverses = sorted(
            o for o in index.get((subj, OWL_INVERSE_OF), []) if isinstance(o, Iri)
        )
        prop.inverse_of = inverses[0] if inverses else None
        prop.super_properties = sorted(
            {o for o in index.get((subj, RDFS_SUBPROPERTY_OF), [])
             if isinstance(o, Iri) and o != subj}
        )
        prop.mappings = _collect_mappings(index, subj)
        prop.label = _first_literal(index, subj, RDFS_LABEL)
        prop.comment = _first_literal(index, subj, RDFS_COMMENT)

    return model


def _collect_mappings(index: dict, subj: Iri) -> list[Iri]:
    found: set[Iri] = set()
    for pred in _MAPPING_PREDICATES:
        found.update(o for o in index.get((subj, pred), []) if isinstance(o, Iri))
    return sorted(found)


def _first_literal(index: dict, subj: Iri, pred: Iri) -> Optional[str]:
    values = sorted(
        o.lexical for o in index.get((subj, pred), []) if isinstance(o, Literal)
    )
    return values[0] if values else None


# --- validation -----------------------------------------------------------

def validate(model: OntologyModel) -> list[Diagnostic]:
    """All structural findings, sorted by (severity, subject IRI).

    An empty result means the model is ready for code generation.
    """
    diags: list[Diagnostic] = []
    diags.extend(_check_cycles(model))
    diags.extend(_check_resolution(model))
    diags.extend(_check_naming(model))
    diags.extend(_check_duplicates(model))
    return sorted(
        diags,
        key=lambda d: (d.severity.value, d.subject.value if d.subject else "", d.code),
    )


def _check_cycles(model: OntologyModel) -> list[Diagnostic]:
    # Tarjan-style SCC is overkill at vocabulary scale; iterative DFS per node.
    diags = []
    reported: set[frozenset[Iri]] = set()
    for start in model.classes:
        path: list[Iri] = []
        seen_on_path: set[Iri] = set()

        def walk(node: Iri) -> Optional[list[Iri]]:
            if node in seen_on_path:
                return path[path.index(node):]
            if node not in model.classes:
                return None
            path.append(node)
            seen_on_path.add(node)
            for sup in model.classes[node].superclasses:
                cyc = walk(sup)
                if cyc is not None:
                    return cyc
            path.pop()
            seen_on_path.discard(node)
            return None

        cycle = walk(start)
        if cycle:
            key = frozenset(cycle)
            if key not in reported:
                reported.add(key)
                members = ", ".join(sorted(c.value for c in cycle))
                diags.append(
                    Diagnostic(
                        Severity.ERROR,
                        "CYCLE",
                        f"subclass cycle involving {members}",
                        subject=min(cycle),
                    )
                )
    return diags


def _check_resolution(model: OntologyModel) -> list[Diagnostic]:
    diags = []
    for iri, prop in model.properties.items():
        if not prop.domains:
            diags.append(
                Diagnostic(
                    Severity.WARNING,
                    "NO_DOMAIN",
                    "property declares no domain; excluded from generated types",
                    subject=iri,
                )
            )
        for d in prop.domains:
            if d not in model.classes:
                diags.append(
                    Diagnostic(
                        Severity.ERROR,
                        "DANGLING_DOMAIN",
                        f"domain {d.value} is not a class in the model",
                        subject=iri,
                    )
                )
        if not prop.ranges:
            diags.append(
                Diagnostic(
                    Severity.ERROR,
                    "DANGLING_RANGE",
                    "property declares no range",
                    subject=iri,
                )
            )
        for r in prop.ranges:
            if r not in model.classes and not r.value.startswith(XSD_NS):
                diags.append(
                    Diagnostic(
                        Severity.ERROR,
                        "DANGLING_RANGE",
                        f"range {r.value} is neither a model class nor an XSD datatype",
                        subject=iri,
                    )
                )
        if prop.inverse_of is not None and prop.inverse_of not in model.properties:
            diags.append(
                Diagnostic(
                    Severity.ERROR,
                    "DANGLING_INVERSE",
                    f"inverse {prop.inverse_of.value} is not a property in the model",
                    subject=iri,
                )
            )
        for sp in prop.super_properties:
            if sp not in model.properties:
                diags.append(
                    Diagnostic(
                        Severity.ERROR,
                        "DANGLING_SUPERPROP",
                        f"super-property {sp.value} is not a property in the model",
                        subject=iri,
                    )
                )
    return diags


def _check_naming(model: OntologyModel) -> list[Diagnostic]:
    diags = []
    for iri, cls in model.classes.items():
        if not _is_fixed_point(cls.local_name, NamingConvention.PASCAL):
            diags.append(
                Diagnostic(
                    Severity.WARNING,
                    "NAMING",
                    f"class name {cls.local_name!r} is not PascalCase",
                    subject=iri,
                )
            )
    for iri, prop in model.properties.items():
        if not _is_fixed_point(prop.local_name, NamingConvention.CAMEL):
            diags.append(
                Diagnostic(
                    Severity.WARNING,
                    "NAMING",
                    f"property name {prop.local_name!r} is not camelCase",
                    subject=iri,
                )
            )
    return diags


def _is_fixed_point(name: str, convention: NamingConvention) -> bool:
    try:
        return apply_convention(split_words(name), convention) == name
    except InvalidIdentifierError:
        return False


def _check_duplicates(model: OntologyModel) -> list[Diagnostic]:
    diags = []
    for kind, table in (("class", model.classes), ("property", model.properties)):
        by_name: dict[str, list[Iri]] = {}
        for iri, entity in table.items():
            by_name.setdefault(entity.local_name, []).append(iri)
        for name, iris in sorted(by_name.items()):
            if len(iris) > 1:
                others = ", ".join(sorted(i.value for i in iris))
                diags.append(
                    Diagnostic(
                        Severity.ERROR,
                        "DUPLICATE_LOCAL_NAME",
                        f"{kind} local name {name!r} shared by {others}",
                        subject=min(iris),
                    )
                )
    return diags


# --- queries ---------------------------------------------------------------

def ancestors(model: OntologyModel, class_iri: Iri) -> list[Iri]:
    """Transitive superclasses, nearest first; BFS with IRI-sorted ties."""
    if class_iri not in model.classes:
        raise UnknownClassError(class_iri)
    out: list[Iri] = []
    seen = {class_iri}
    frontier = [class_iri]
    while frontier:
        next_frontier: list[Iri] = []
        for node in frontier:
            for sup in sorted(model.classes[node].superclasses):
                if sup not in seen and sup in model.classes:
                    seen.add(sup)
                    out.append(sup)
                    next_frontier.append(sup)
        frontier = next_frontier
    return out


def effective_properties(model: OntologyModel, class_iri: Iri) -> list[OntologyProperty]:
    """Properties applicable to a class: own-domain first, then inherited,
    each group sorted by local name."""
    if class_iri not in model.classes:
        raise UnknownClassError(class_iri)
    lineage = set(ancestors(model, class_iri))
    own = []
    inherited = []
    for prop in model.properties.values():
        domains = set(prop.domains)
        if class_iri in domains:
            own.append(prop)
        elif domains & lineage:
            inherited.append(prop)
    own.sort(key=lambda p: p.local_name)
    inherited.sort(key=lambda p: p.local_name)
    return own + inherited
