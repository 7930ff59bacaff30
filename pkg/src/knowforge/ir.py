"""Language-neutral code IR: profiles, scalar mapping, and IR construction."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from .model import OntologyModel, UnknownClassError, ancestors, effective_properties
from .naming import NamingConvention, WordSequence, apply_convention, split_words
from .rdf import XSD_NS, Iri


class ScalarKind(Enum):
    TEXT = "text"
    INTEGER = "integer"
    DECIMAL = "decimal"
    BOOLEAN = "boolean"
    DATE = "date"
    DATETIME = "datetime"
    IRI = "iri"


_XSD_TO_SCALAR = {
    XSD_NS + "string": ScalarKind.TEXT,
    XSD_NS + "integer": ScalarKind.INTEGER,
    XSD_NS + "int": ScalarKind.INTEGER,
    XSD_NS + "long": ScalarKind.INTEGER,
    XSD_NS + "decimal": ScalarKind.DECIMAL,
    XSD_NS + "double": ScalarKind.DECIMAL,
    XSD_NS + "float": ScalarKind.DECIMAL,
    XSD_NS + "boolean": ScalarKind.BOOLEAN,
    XSD_NS + "date": ScalarKind.DATE,
    XSD_NS + "dateTime": ScalarKind.DATETIME,
    XSD_NS + "anyURI": ScalarKind.IRI,
}

# Canonical RDF datatype used when serializing each scalar kind back out.
SCALAR_TO_XSD = {
    ScalarKind.TEXT: Iri(XSD_NS + "string"),
    ScalarKind.INTEGER: Iri(XSD_NS + "integer"),
    ScalarKind.DECIMAL: Iri(XSD_NS + "decimal"),
    ScalarKind.BOOLEAN: Iri(XSD_NS + "boolean"),
    ScalarKind.DATE: Iri(XSD_NS + "date"),
    ScalarKind.DATETIME: Iri(XSD_NS + "dateTime"),
    ScalarKind.IRI: Iri(XSD_NS + "anyURI"),
}


class UnsupportedDatatypeError(ValueError):
    def __init__(self, iri: Iri, context: str = ""):
        suffix = f" ({context})" if context else ""
        super().__init__(f"unsupported datatype {iri.value}{suffix}")
        self.iri = iri


def map_scalar(datatype: Iri) -> ScalarKind:
    kind = _XSD_TO_SCALAR.get(datatype.value)
    if kind is None:
        raise UnsupportedDatatypeError(datatype)
    return kind


class Cardinality(Enum):
    OPTIONAL_SINGLE = "optional_single"
    MANY = "many"


@dataclass(frozen=True)
class EntityRef:
    """A reference to another generated type, by class IRI."""

    target: Iri


@dataclass(frozen=True)
class FieldSpec:
    words: WordSequence
    value: Union[ScalarKind, EntityRef]
    cardinality: Cardinality
    origin: Iri
    property_iri: Iri


class Construct(Enum):
    RECORD = "record"
    CLASS_LIKE = "class_like"
    INTERFACE_RECORD = "interface_record"
    TRAIT_RECORD = "trait_record"
    DYNAMIC = "dynamic"


@dataclass(frozen=True)
class TargetProfile:
    name: str
    construct: Construct
    type_naming: NamingConvention
    field_naming: NamingConvention
    file_naming: NamingConvention
    file_extension: str
    flatten_inheritance: bool
    scalar_map: dict[ScalarKind, str]
    optional_template: str
    collection_template: str
    emit_json: bool
    emit_rdf: bool
    preamble: str

    def __post_init__(self) -> None:
        missing = [k.value for k in ScalarKind if k not in self.scalar_map]
        if missing:
            raise ValueError(f"profile {self.name}: scalar_map missing {missing}")
        if self.construct is Construct.RECORD and not self.flatten_inheritance:
            raise ValueError(
                f"profile {self.name}: record construct requires flattened inheritance"
            )

    def scalar(self, kind: ScalarKind) -> str:
        return self.scalar_map[kind]

    def optional(self, type_token: str) -> str:
        return self.optional_template.replace("{T}", type_token)

    def collection(self, type_token: str) -> str:
        return self.collection_template.replace("{T}", type_token)


@dataclass(frozen=True)
class TypeSpec:
    words: WordSequence
    class_iri: Iri
    parent: Optional[Iri]
    own_fields: tuple[FieldSpec, ...]
    all_fields: tuple[FieldSpec, ...]
    doc: Optional[str] = None


def _field_from_property(prop, model: OntologyModel, origin: Iri) -> FieldSpec:
    ranges = prop.ranges
    value: Union[ScalarKind, EntityRef]
    entity_ranges = [r for r in ranges if r in model.classes]
    if entity_ranges:
        value = EntityRef(entity_ranges[0])
    else:
        if not ranges:
            raise UnsupportedDatatypeError(prop.iri, f"property {prop.local_name} has no range")
        try:
            value = map_scalar(ranges[0])
        except UnsupportedDatatypeError as exc:
            raise UnsupportedDatatypeError(ranges[0], f"property {prop.local_name}") from exc
    return FieldSpec(
        words=split_words(prop.local_name),
        value=value,
        cardinality=Cardinality.OPTIONAL_SINGLE if prop.functional else Cardinality.MANY,
        origin=origin,
        property_iri=prop.iri,
    )


def build_ir(model: OntologyModel, profile: TargetProfile) -> list[TypeSpec]:
    """One TypeSpec per class, parents before children (ties by type name)."""
    order = _topological_classes(model, profile.type_naming)
    specs: list[TypeSpec] = []
    for class_iri in order:
        cls = model.classes[class_iri]
        words = split_words(cls.local_name)
        lineage = ancestors(model, class_iri)
        own = []
        inherited = []
        for prop in effective_properties(model, class_iri):
            origin = class_iri if class_iri in prop.domains else _declaring_ancestor(
                prop, lineage
            )
            spec = _field_from_property(prop, model, origin)
            (own if origin == class_iri else inherited).append(spec)
        inherited.sort(key=lambda f: (_ancestor_rank(f.origin, lineage), f.words.words))
        all_fields = tuple(inherited + own)
        seen_names: set[tuple[str, ...]] = set()
        for f in all_fields:
            if f.words.words in seen_names:
                raise ValueError(
                    f"duplicate field name {'_'.join(f.words.words)} on {cls.local_name}"
                )
            seen_names.add(f.words.words)
        parent: Optional[Iri]
        if profile.flatten_inheritance or not cls.superclasses:
            parent = None
        else:
            parent = min(s for s in cls.superclasses if s in model.classes)
        specs.append(
            TypeSpec(
                words=words,
                class_iri=class_iri,
                parent=parent,
                own_fields=tuple(own),
                all_fields=all_fields,
                doc=cls.comment or cls.label,
            )
        )
    return specs


def _declaring_ancestor(prop, lineage: list[Iri]) -> Iri:
    for anc in lineage:
        if anc in prop.domains:
            return anc
    return prop.domains[0]


def _ancestor_rank(origin: Iri, lineage: list[Iri]) -> int:
    try:
        return lineage.index(origin)
    except ValueError:
        return len(lineage)


def _topological_classes(model: OntologyModel, type_naming: NamingConvention) -> list[Iri]:
    def type_name(iri: Iri) -> str:
        return apply_convention(split_words(model.classes[iri].local_name), type_naming)

    remaining = set(model.classes)
    placed: set[Iri] = set()
    order: list[Iri] = []
    while remaining:
        ready = sorted(
            (
                iri
                for iri in remaining
                if all(
                    sup in placed
                    for sup in model.classes[iri].superclasses
                    if sup in model.classes
                )
            ),
            key=lambda iri: (type_name(iri), iri.value),
        )
        if not ready:
            raise ValueError("subclass graph contains a cycle; validate the model first")
        for iri in ready:
            order.append(iri)
            placed.add(iri)
            remaining.discard(iri)
    return order


# --- profile loading --------------------------------------------------------

class UnknownProfileError(KeyError):
    def __init__(self, token: str, available: list[str]):
        super().__init__(token)
        self.token = token
        self.available = available


def default_profiles_dir() -> Path:
    env = os.environ.get("KNOWFORGE_PROFILES")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "profiles"


def load_profile(token: str, profiles_dir: Optional[Path] = None) -> TargetProfile:
    directory = profiles_dir or default_profiles_dir()
    path = directory / f"{token}.json"
    if not path.is_file():
        raise UnknownProfileError(token, available_tokens(directory))
    raw = json.loads(path.read_text(encoding="utf-8"))
    return TargetProfile(
        name=raw["name"],
        construct=Construct(raw["construct"]),
        type_naming=NamingConvention(raw["type_naming"]),
        field_naming=NamingConvention(raw["field_naming"]),
        file_naming=NamingConvention(raw["file_naming"]),
        file_extension=raw["file_extension"],
        flatten_inheritance=raw["flatten_inheritance"],
        scalar_map={ScalarKind(k): v for k, v in raw["scalar_map"].items()},
        optional_template=raw["optional_template"],
        collection_template=raw["collection_template"],
        emit_json=raw["emit_json"],
        emit_rdf=raw["emit_rdf"],
        preamble=raw["preamble"],
    )


def available_tokens(profiles_dir: Optional[Path] = None) -> list[str]:
    directory = profiles_dir or default_profiles_dir()
    return sorted(p.stem for p in directory.glob("*.json"))
