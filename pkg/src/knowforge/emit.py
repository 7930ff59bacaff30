"""Render the code IR into per-profile source trees; reference instance codecs.

Implemented emitters: c, go, py, rs, ts. The remaining profile tokens ship
as data only and raise NotImplementedProfileError here.

The reference codecs (instance_to_json / instance_from_json /
instance_to_triples) define the interchange shape every generated SDK must
match. instance_to_json assembles its output by hand so that tests can
cross-check it against the json module as an independent formatter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .ir import (
    Cardinality,
    Construct,
    EntityRef,
    FieldSpec,
    ScalarKind,
    SCALAR_TO_XSD,
    TargetProfile,
    TypeSpec,
)
from .model import OntologyModel, effective_properties
from .naming import NamingConvention, apply_convention, split_words
from .rdf import RDF_TYPE, XSD_STRING, Graph, Iri, Literal, Triple, to_ntriples

IMPLEMENTED_TOKENS = frozenset({"c", "go", "py", "rs", "ts"})


class NotImplementedProfileError(Exception):
    def __init__(self, token: str):
        super().__init__(f"profile '{token}' ships as data only; no emitter implemented")
        self.token = token


@dataclass
class FileSet:
    """A rendered output tree: relative POSIX path -> UTF-8 text."""

    files: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for path in self.files:
            if path.startswith("/") or ".." in path.split("/"):
                raise ValueError(f"path must be relative without '..': {path}")
        self.files = dict(sorted(self.files.items()))


def _type_name(spec: TypeSpec, profile: TargetProfile) -> str:
    return apply_convention(spec.words, profile.type_naming)


def _field_name(f: FieldSpec, profile: TargetProfile) -> str:
    return apply_convention(f.words, profile.field_naming)


def _file_name(spec: TypeSpec, profile: TargetProfile) -> str:
    return apply_convention(spec.words, profile.file_naming) + profile.file_extension


def _json_key(f: FieldSpec) -> str:
    return apply_convention(f.words, NamingConvention.CAMEL)


def _base_type(f: FieldSpec, profile: TargetProfile) -> str:
    if isinstance(f.value, EntityRef):
        return profile.scalar(ScalarKind.IRI)
    return profile.scalar(f.value)


def _field_type(f: FieldSpec, profile: TargetProfile) -> str:
    base = _base_type(f, profile)
    if f.cardinality is Cardinality.OPTIONAL_SINGLE:
        return profile.optional(base)
    return profile.collection(base)


def _kind_token(f: FieldSpec) -> str:
    return "ref" if isinstance(f.value, EntityRef) else f.value.value


def emit(ir: list[TypeSpec], profile: TargetProfile) -> FileSet:
    """Render one source file per type plus a manifest/index file."""
    emitter = _EMITTERS.get(profile.name)
    if emitter is None:
        raise NotImplementedProfileError(profile.name)
    files = emitter(ir, profile)
    normalized = {
        path: text.rstrip("\n") + "\n" if text else "\n" for path, text in files.items()
    }
    return FileSet(normalized)


# --- C --------------------------------------------------------------------

def _emit_c(ir: list[TypeSpec], profile: TargetProfile) -> dict[str, str]:
    files: dict[str, str] = {}
    for spec in ir:
        name = _type_name(spec, profile)
        guard = "KNOW_" + apply_convention(spec.words, NamingConvention.LOWER_SNAKE).upper() + "_H"
        lines = [profile.preamble, ""]
        lines += [f"#ifndef {guard}", f"#define {guard}", ""]
        lines += ["#include <stdbool.h>", "#include <stddef.h>", ""]
        if spec.doc:
            lines.append(f"/* {spec.doc} */")
        macro = apply_convention(spec.words, NamingConvention.LOWER_SNAKE).upper()
        lines.append(f'#define KNOW_{macro}_TYPE_IRI "{spec.class_iri.value}"')
        lines.append("")
        lines.append(f"typedef struct {name} {{")
        lines.append("    const char *id;")
        for f in spec.all_fields:
            fname = _field_name(f, profile)
            if f.cardinality is Cardinality.OPTIONAL_SINGLE:
                lines.append(f"    {_field_type(f, profile)} {fname}; /* optional */")
            else:
                lines.append(f"    {_field_type(f, profile)} {fname};")
                lines.append(f"    size_t {fname}_count;")
        lines.append(f"}} {name};")
        lines += ["", f"#endif /* {guard} */"]
        files[_file_name(spec, profile)] = "\n".join(lines) + "\n"

    manifest = [profile.preamble, "", "#ifndef KNOW_H", "#define KNOW_H", ""]
    manifest.append("/* Generated types:")
    for spec in sorted(ir, key=lambda s: _type_name(s, profile)):
        manifest.append(f" *   {_type_name(spec, profile)}")
    manifest.append(" */")
    manifest.append("")
    for spec in sorted(ir, key=lambda s: _file_name(s, profile)):
        manifest.append(f'#include "{_file_name(spec, profile)}"')
    manifest += ["", "#endif /* KNOW_H */"]
    files["know.h"] = "\n".join(manifest) + "\n"
    return files


# --- Python ---------------------------------------------------------------

_PY_BASE = '''\
{preamble}
"""Runtime support for the generated SDK: field metadata, JSON and RDF codecs."""

import json


class FieldDef:
    """One serializable field: attribute, JSON key, property IRI, scalar kind."""

    __slots__ = ("attr", "key", "iri", "kind", "many")

    def __init__(self, attr, key, iri, kind, many):
        self.attr = attr
        self.key = key
        self.iri = iri
        self.kind = kind
        self.many = many


_DATATYPES = {{
    "text": "http://www.w3.org/2001/XMLSchema#string",
    "integer": "http://www.w3.org/2001/XMLSchema#integer",
    "decimal": "http://www.w3.org/2001/XMLSchema#decimal",
    "boolean": "http://www.w3.org/2001/XMLSchema#boolean",
    "date": "http://www.w3.org/2001/XMLSchema#date",
    "datetime": "http://www.w3.org/2001/XMLSchema#dateTime",
    "iri": "http://www.w3.org/2001/XMLSchema#anyURI",
}}

_RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"


def _escape_literal(value):
    out = []
    for ch in value:
        if ch == "\\\\":
            out.append("\\\\\\\\")
        elif ch == '"':
            out.append('\\\\"')
        elif ch == "\\n":
            out.append("\\\\n")
        elif ch == "\\r":
            out.append("\\\\r")
        elif ch == "\\t":
            out.append("\\\\t")
        elif ord(ch) < 0x20:
            out.append("\\\\u%04X" % ord(ch))
        else:
            out.append(ch)
    return "".join(out)


def _format_object(value, kind):
    if kind == "ref":
        return "<%s>" % value
    if kind == "boolean":
        lexical = "true" if value else "false"
    elif kind == "integer":
        lexical = str(int(value))
    else:
        lexical = str(value)
    quoted = '"%s"' % _escape_literal(lexical)
    if kind == "text":
        return quoted
    return '%s^^<%s>' % (quoted, _DATATYPES[kind])


class Entity:
    """Base for all generated classes; behavior is driven by FIELDS."""

    TYPE_IRI = None
    FIELDS = ()

    def __init__(self, id, **values):
        self.id = id
        by_attr = {{f.attr: f for f in self.FIELDS}}
        for f in self.FIELDS:
            setattr(self, f.attr, [] if f.many else None)
        for attr, value in values.items():
            f = by_attr.get(attr)
            if f is None:
                raise TypeError("unknown field %r for %s" % (attr, type(self).__name__))
            setattr(self, attr, list(value) if f.many else value)

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        if self.id != other.id:
            return False
        return all(
            getattr(self, f.attr) == getattr(other, f.attr) for f in self.FIELDS
        )

    def __repr__(self):
        return "%s(id=%r)" % (type(self).__name__, self.id)

    def to_json_text(self):
        obj = {{"id": self.id, "type": self.TYPE_IRI}}
        for f in sorted(self.FIELDS, key=lambda f: f.key):
            value = getattr(self, f.attr)
            if f.many:
                if value:
                    obj[f.key] = list(value)
            elif value is not None:
                obj[f.key] = value
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\\n"

    @classmethod
    def from_json_text(cls, text):
        obj = json.loads(text)
        if not isinstance(obj, dict):
            raise ValueError("expected a JSON object")
        if obj.get("type") != cls.TYPE_IRI:
            raise ValueError(
                "type mismatch: expected %s, found %s" % (cls.TYPE_IRI, obj.get("type"))
            )
        if "id" not in obj:
            raise ValueError("missing 'id' member")
        by_key = {{f.key: f for f in cls.FIELDS}}
        values = {{}}
        for key, value in obj.items():
            if key in ("id", "type"):
                continue
            f = by_key.get(key)
            if f is None:
                raise ValueError("unknown property key %r" % key)
            if f.many:
                if not isinstance(value, list):
                    raise ValueError("property %r takes an array" % key)
                values[f.attr] = list(value)
            else:
                if isinstance(value, list):
                    raise ValueError("property %r takes a single value" % key)
                values[f.attr] = value
        return cls(id=obj["id"], **values)

    def to_ntriples(self):
        lines = ["<%s> <%s> <%s> ." % (self.id, _RDF_TYPE, self.TYPE_IRI)]
        for f in self.FIELDS:
            value = getattr(self, f.attr)
            items = value if f.many else ([] if value is None else [value])
            for item in items:
                lines.append(
                    "<%s> <%s> %s ." % (self.id, f.iri, _format_object(item, f.kind))
                )
        return "".join(line + "\\n" for line in sorted(set(lines)))
'''


def _emit_py(ir: list[TypeSpec], profile: TargetProfile) -> dict[str, str]:
    files: dict[str, str] = {"_base.py": _PY_BASE.format(preamble=profile.preamble)}
    by_iri = {spec.class_iri: spec for spec in ir}
    for spec in ir:
        name = _type_name(spec, profile)
        lines = [profile.preamble, ""]
        if spec.parent is not None and spec.parent in by_iri:
            parent_spec = by_iri[spec.parent]
            parent_name = _type_name(parent_spec, profile)
            parent_module = apply_convention(parent_spec.words, profile.file_naming)
            lines.append(f"from .{parent_module} import {parent_name}")
            if spec.own_fields:
                lines.append("from ._base import FieldDef")
            base = parent_name
        else:
            if spec.all_fields:
                lines.append("from ._base import Entity, FieldDef")
            else:
                lines.append("from ._base import Entity")
            base = "Entity"
        lines.append("")
        lines.append("")
        lines.append(f"class {name}({base}):")
        if spec.doc:
            lines.append(f'    """{spec.doc}"""')
            lines.append("")
        lines.append(f'    TYPE_IRI = "{spec.class_iri.value}"')
        if spec.all_fields:
            lines.append("    FIELDS = (")
            for f in spec.all_fields:
                lines.append(
                    "        FieldDef({!r}, {!r}, {!r}, {!r}, {!r}),".format(
                        _field_name(f, profile),
                        _json_key(f),
                        f.property_iri.value,
                        _kind_token(f),
                        f.cardinality is Cardinality.MANY,
                    )
                )
            lines.append("    )")
        elif spec.parent is None:
            lines.append("    FIELDS = ()")
        files[_file_name(spec, profile)] = "\n".join(lines) + "\n"

    index = [profile.preamble, "", '"""Generated SDK index and runtime type registry."""', ""]
    ordered = sorted(ir, key=lambda s: _type_name(s, profile))
    for spec in ordered:
        module = apply_convention(spec.words, profile.file_naming)
        index.append(f"from .{module} import {_type_name(spec, profile)}")
    index.append("")
    index.append("__all__ = [")
    for spec in ordered:
        index.append(f'    "{_type_name(spec, profile)}",')
    index.append("]")
    index.append("")
    index.append("TYPE_REGISTRY = {")
    for spec in ordered:
        index.append(f"    {_type_name(spec, profile)}.TYPE_IRI: {_type_name(spec, profile)},")
    index.append("}")
    index.append("")
    index.append("")
    index.append("def decode_json(text):")
    index.append('    """Decode any instance document by dispatching on its type IRI."""')
    index.append("    import json as _json")
    index.append("")
    index.append("    obj = _json.loads(text)")
    index.append('    if not isinstance(obj, dict) or "type" not in obj:')
    index.append('        raise ValueError("expected an object with a \'type\' member")')
    index.append('    cls = TYPE_REGISTRY.get(obj["type"])')
    index.append("    if cls is None:")
    index.append('        raise ValueError("unknown type IRI %r" % obj["type"])')
    index.append("    return cls.from_json_text(text)")
    files["__init__.py"] = "\n".join(index) + "\n"
    return files


# --- TypeScript -------------------------------------------------------------

_TS_RUNTIME = """\
{preamble}

/** One serializable field: attribute, JSON key, property IRI, scalar kind. */
export interface FieldDef {{
  attr: string;
  key: string;
  iri: string;
  kind: string;
  many: boolean;
}}

export const RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

const DATATYPES: Record<string, string> = {{
  text: "http://www.w3.org/2001/XMLSchema#string",
  integer: "http://www.w3.org/2001/XMLSchema#integer",
  decimal: "http://www.w3.org/2001/XMLSchema#decimal",
  boolean: "http://www.w3.org/2001/XMLSchema#boolean",
  date: "http://www.w3.org/2001/XMLSchema#date",
  datetime: "http://www.w3.org/2001/XMLSchema#dateTime",
  iri: "http://www.w3.org/2001/XMLSchema#anyURI",
}};

export function escapeLiteral(value: string): string {{
  let out = "";
  for (const ch of value) {{
    const code = ch.codePointAt(0) as number;
    if (ch === "\\\\") out += "\\\\\\\\";
    else if (ch === '"') out += '\\\\"';
    else if (ch === "\\n") out += "\\\\n";
    else if (ch === "\\r") out += "\\\\r";
    else if (ch === "\\t") out += "\\\\t";
    else if (code < 0x20) out += "\\\\u" + code.toString(16).toUpperCase().padStart(4, "0");
    else out += ch;
  }}
  return out;
}}

export function formatObject(value: unknown, kind: string): string {{
  if (kind === "ref") return `<${{value}}>`;
  let lexical: string;
  if (kind === "boolean") lexical = value ? "true" : "false";
  else lexical = String(value);
  const quoted = `"${{escapeLiteral(lexical)}}"`;
  if (kind === "text") return quoted;
  return `${{quoted}}^^<${{DATATYPES[kind]}}>`;
}}

export function encodeInstance(
  id: string,
  typeIri: string,
  fields: FieldDef[],
  values: Record<string, unknown>,
): string {{
  const obj: Record<string, unknown> = {{ id, type: typeIri }};
  const sorted = [...fields].sort((a, b) => (a.key < b.key ? -1 : a.key > b.key ? 1 : 0));
  for (const f of sorted) {{
    const v = values[f.attr];
    if (f.many) {{
      if (Array.isArray(v) && v.length > 0) obj[f.key] = v;
    }} else if (v !== null && v !== undefined) {{
      obj[f.key] = v;
    }}
  }}
  return JSON.stringify(obj, null, 2) + "\\n";
}}

export function decodeInstance(
  text: string,
  typeIri: string,
  fields: FieldDef[],
): {{ id: string; values: Record<string, unknown> }} {{
  const obj = JSON.parse(text) as Record<string, unknown>;
  if (typeof obj !== "object" || obj === null) throw new Error("expected a JSON object");
  if (obj["type"] !== typeIri) {{
    throw new Error(`type mismatch: expected ${{typeIri}}, found ${{obj["type"]}}`);
  }}
  if (typeof obj["id"] !== "string") throw new Error("missing 'id' member");
  const byKey = new Map(fields.map((f) => [f.key, f]));
  const values: Record<string, unknown> = {{}};
  for (const key of Object.keys(obj)) {{
    if (key === "id" || key === "type") continue;
    const f = byKey.get(key);
    if (f === undefined) throw new Error(`unknown property key '${{key}}'`);
    if (f.many && !Array.isArray(obj[key])) throw new Error(`property '${{key}}' takes an array`);
    if (!f.many && Array.isArray(obj[key])) throw new Error(`property '${{key}}' takes a single value`);
    values[f.attr] = obj[key];
  }}
  return {{ id: obj["id"], values }};
}}

export function instanceTriples(
  id: string,
  typeIri: string,
  fields: FieldDef[],
  values: Record<string, unknown>,
): string {{
  const lines = [`<${{id}}> <${{RDF_TYPE}}> <${{typeIri}}> .`];
  for (const f of fields) {{
    const v = values[f.attr];
    const items = f.many ? ((v as unknown[]) ?? []) : v === null || v === undefined ? [] : [v];
    for (const item of items) {{
      lines.push(`<${{id}}> <${{f.iri}}> ${{formatObject(item, f.kind)}} .`);
    }}
  }}
  return [...new Set(lines)].sort().map((l) => l + "\\n").join("");
}}
"""


def _emit_ts(ir: list[TypeSpec], profile: TargetProfile) -> dict[str, str]:
    files: dict[str, str] = {"runtime.ts": _TS_RUNTIME.format(preamble=profile.preamble)}
    by_iri = {spec.class_iri: spec for spec in ir}
    for spec in ir:
        name = _type_name(spec, profile)
        record = name + "Record"
        lines = [profile.preamble, ""]
        imports = ["FieldDef", "decodeInstance", "encodeInstance", "instanceTriples"]
        lines.append(f'import {{ {", ".join(imports)} }} from "./runtime";')
        parent_clause = ""
        parent_record = None
        if spec.parent is not None and spec.parent in by_iri:
            parent_spec = by_iri[spec.parent]
            parent_name = _type_name(parent_spec, profile)
            parent_record = parent_name + "Record"
            parent_file = apply_convention(parent_spec.words, profile.file_naming)
            lines.append(
                f'import {{ {parent_name}, {parent_record} }} from "./{parent_file}";'
            )
            parent_clause = f" extends {parent_name}"
        lines.append("")
        if spec.doc:
            lines.append(f"/** {spec.doc} */")
        lines.append(f"export interface {name}{parent_clause} {{")
        if parent_clause == "":
            lines.append("  id: string;")
        for f in spec.own_fields:
            lines.append(f"  {_json_key(f)}: {_field_type(f, profile)};")
        lines.append("}")
        lines.append("")
        lines.append(f"const FIELDS: FieldDef[] = [")
        for f in spec.all_fields:
            lines.append(
                '  {{ attr: "{attr}", key: "{key}", iri: "{iri}", kind: "{kind}", many: {many} }},'.format(
                    attr=_json_key(f),
                    key=_json_key(f),
                    iri=f.property_iri.value,
                    kind=_kind_token(f),
                    many="true" if f.cardinality is Cardinality.MANY else "false",
                )
            )
        lines.append("];")
        lines.append("")
        base_clause = f"extends {parent_record} " if parent_record else ""
        lines.append(f"export class {record} {base_clause}implements {name} {{")
        lines.append(f'  static readonly TYPE_IRI: string = "{spec.class_iri.value}";')
        if not parent_record:
            lines.append("  id: string;")
        for f in spec.own_fields:
            if f.cardinality is Cardinality.MANY:
                lines.append(f"  {_json_key(f)}: {_field_type(f, profile)} = [];")
            else:
                lines.append(f"  {_json_key(f)}: {_field_type(f, profile)} = null;")
        lines.append("")
        lines.append(f"  constructor(id: string, init: Partial<{name}> = {{}}) {{")
        if parent_record:
            lines.append("    super(id, init);")
        else:
            lines.append("    this.id = id;")
            lines.append("    Object.assign(this, init);")
        lines.append("  }")
        lines.append("")
        lines.append("  protected typeIri(): string {")
        lines.append(f"    return {record}.TYPE_IRI;")
        lines.append("  }")
        lines.append("")
        lines.append("  protected fieldDefs(): FieldDef[] {")
        lines.append("    return FIELDS;")
        lines.append("  }")
        lines.append("")
        lines.append("  toJsonText(): string {")
        lines.append(
            "    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(),"
            " this as unknown as Record<string, unknown>);"
        )
        lines.append("  }")
        lines.append("")
        lines.append(f"  static fromJsonText(text: string): {record} {{")
        lines.append(f"    const decoded = decodeInstance(text, {record}.TYPE_IRI, FIELDS);")
        lines.append(f"    return new {record}(decoded.id, decoded.values as Partial<{name}>);")
        lines.append("  }")
        lines.append("")
        lines.append("  toNTriples(): string {")
        lines.append(
            "    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(),"
            " this as unknown as Record<string, unknown>);"
        )
        lines.append("  }")
        lines.append("}")
        files[_file_name(spec, profile)] = "\n".join(lines) + "\n"

    index = [profile.preamble, ""]
    ordered = sorted(ir, key=lambda s: _type_name(s, profile))
    for spec in ordered:
        module = apply_convention(spec.words, profile.file_naming)
        name = _type_name(spec, profile)
        index.append(f'export {{ {name}, {name}Record }} from "./{module}";')
    index.append("")
    index.append("export const TYPES = [")
    for spec in ordered:
        index.append(f'  "{_type_name(spec, profile)}",')
    index.append("];")
    files["index.ts"] = "\n".join(index) + "\n"
    return files


# --- Rust -------------------------------------------------------------------

_RS_RUNTIME = """\
{preamble}

//! Runtime support for the generated SDK: N-Triples formatting helpers.

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

pub fn datatype_iri(kind: &str) -> &'static str {{
    match kind {{
        "integer" => "http://www.w3.org/2001/XMLSchema#integer",
        "decimal" => "http://www.w3.org/2001/XMLSchema#decimal",
        "boolean" => "http://www.w3.org/2001/XMLSchema#boolean",
        "date" => "http://www.w3.org/2001/XMLSchema#date",
        "datetime" => "http://www.w3.org/2001/XMLSchema#dateTime",
        "iri" => "http://www.w3.org/2001/XMLSchema#anyURI",
        _ => "http://www.w3.org/2001/XMLSchema#string",
    }}
}}

pub fn escape_literal(value: &str) -> String {{
    let mut out = String::with_capacity(value.len());
    for ch in value.chars() {{
        match ch {{
            '\\\\' => out.push_str("\\\\\\\\"),
            '"' => out.push_str("\\\\\\""),
            '\\n' => out.push_str("\\\\n"),
            '\\r' => out.push_str("\\\\r"),
            '\\t' => out.push_str("\\\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\\\u{{:04X}}", c as u32)),
            c => out.push(c),
        }}
    }}
    out
}}

pub fn format_ref(iri: &str) -> String {{
    format!("<{{}}>", iri)
}}

pub fn format_literal(lexical: &str, kind: &str) -> String {{
    let quoted = format!("\\"{{}}\\"", escape_literal(lexical));
    if kind == "text" {{
        quoted
    }} else {{
        format!("{{}}^^<{{}}>", quoted, datatype_iri(kind))
    }}
}}

pub fn finish_triples(mut lines: Vec<String>) -> String {{
    lines.sort();
    lines.dedup();
    lines.into_iter().map(|l| l + "\\n").collect()
}}
"""


def _emit_rs(ir: list[TypeSpec], profile: TargetProfile) -> dict[str, str]:
    files: dict[str, str] = {"runtime.rs": _RS_RUNTIME.format(preamble=profile.preamble)}
    for spec in ir:
        name = _type_name(spec, profile)
        record = name + "Record"
        json_fields = sorted(spec.all_fields, key=_json_key)
        lines = [profile.preamble, ""]
        lines.append("use serde::{Deserialize, Serialize};")
        lines.append("")
        lines.append("use crate::runtime;")
        lines.append("")
        if spec.doc:
            lines.append(f"/// {spec.doc}")
        lines.append(f"pub trait {name} {{")
        lines.append("    fn id(&self) -> &str;")
        for f in spec.all_fields:
            fname = _field_name(f, profile)
            base = _base_type(f, profile)
            if f.cardinality is Cardinality.OPTIONAL_SINGLE:
                ret = f"Option<&{base}>" if base == "String" else f"Option<{base}>"
            else:
                ret = f"&[{base}]"
            lines.append(f"    fn {fname}(&self) -> {ret};")
        lines.append("}")
        lines.append("")
        lines.append("#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]")
        lines.append('#[serde(deny_unknown_fields)]')
        lines.append(f"pub struct {record} {{")
        lines.append("    pub id: String,")
        lines.append('    #[serde(rename = "type")]')
        lines.append("    pub type_iri: String,")
        for f in json_fields:
            fname = _field_name(f, profile)
            key = _json_key(f)
            if f.cardinality is Cardinality.OPTIONAL_SINGLE:
                attr = '#[serde(skip_serializing_if = "Option::is_none", default)]'
            else:
                attr = '#[serde(skip_serializing_if = "Vec::is_empty", default)]'
            if key != fname:
                lines.append(f'    #[serde(rename = "{key}")]')
            lines.append(f"    {attr}")
            lines.append(f"    pub {fname}: {_field_type(f, profile)},")
        lines.append("}")
        lines.append("")
        lines.append(f"impl {record} {{")
        lines.append(f'    pub const TYPE_IRI: &\'static str = "{spec.class_iri.value}";')
        lines.append("")
        lines.append("    pub fn new(id: String) -> Self {")
        lines.append("        Self {")
        lines.append("            id,")
        lines.append(f"            type_iri: Self::TYPE_IRI.to_string(),")
        for f in json_fields:
            fname = _field_name(f, profile)
            default = "None" if f.cardinality is Cardinality.OPTIONAL_SINGLE else "Vec::new()"
            lines.append(f"            {fname}: {default},")
        lines.append("        }")
        lines.append("    }")
        lines.append("")
        lines.append("    pub fn to_json_text(&self) -> serde_json::Result<String> {")
        lines.append("        Ok(serde_json::to_string_pretty(self)? + \"\\n\")")
        lines.append("    }")
        lines.append("")
        lines.append("    pub fn from_json_text(text: &str) -> serde_json::Result<Self> {")
        lines.append("        serde_json::from_str(text)")
        lines.append("    }")
        lines.append("")
        lines.append("    pub fn to_ntriples(&self) -> String {")
        mut = "mut " if spec.all_fields else ""
        lines.append(f"        let {mut}lines = vec![format!(")
        lines.append('            "<{}> <{}> <{}> .",')
        lines.append("            self.id, runtime::RDF_TYPE, Self::TYPE_IRI")
        lines.append("        )];")
        for f in spec.all_fields:
            fname = _field_name(f, profile)
            kind = _kind_token(f)
            if f.cardinality is Cardinality.OPTIONAL_SINGLE:
                lines.append(f"        if let Some(value) = &self.{fname} {{")
                indent = "            "
                value_expr = "value"
            else:
                lines.append(f"        for value in &self.{fname} {{")
                indent = "            "
                value_expr = "value"
            if kind == "ref":
                obj = f"runtime::format_ref({value_expr})"
            elif kind in ("integer", "decimal", "boolean"):
                obj = f'runtime::format_literal(&{value_expr}.to_string(), "{kind}")'
            else:
                obj = f'runtime::format_literal({value_expr}, "{kind}")'
            lines.append(
                f'{indent}lines.push(format!("<{{}}> <{{}}> {{}} .", self.id, "{f.property_iri.value}", {obj}));'
            )
            lines.append("        }")
        lines.append("        runtime::finish_triples(lines)")
        lines.append("    }")
        lines.append("}")
        lines.append("")
        lines.append(f"impl {name} for {record} {{")
        lines.append("    fn id(&self) -> &str {")
        lines.append("        &self.id")
        lines.append("    }")
        for f in spec.all_fields:
            fname = _field_name(f, profile)
            base = _base_type(f, profile)
            if f.cardinality is Cardinality.OPTIONAL_SINGLE:
                if base == "String":
                    lines.append(f"    fn {fname}(&self) -> Option<&String> {{")
                    lines.append(f"        self.{fname}.as_ref()")
                else:
                    lines.append(f"    fn {fname}(&self) -> Option<{base}> {{")
                    lines.append(f"        self.{fname}")
            else:
                lines.append(f"    fn {fname}(&self) -> &[{base}] {{")
                lines.append(f"        &self.{fname}")
            lines.append("    }")
        lines.append("}")
        files[_file_name(spec, profile)] = "\n".join(lines) + "\n"

    index = [profile.preamble, ""]
    index.append("pub mod runtime;")
    ordered = sorted(ir, key=lambda s: _type_name(s, profile))
    for spec in ordered:
        module = apply_convention(spec.words, profile.file_naming)
        index.append(f"pub mod {module};")
    index.append("")
    index.append("/// Names of all generated types, sorted.")
    index.append("pub const TYPES: &[&str] = &[")
    for spec in ordered:
        index.append(f'    "{_type_name(spec, profile)}",')
    index.append("];")
    files["lib.rs"] = "\n".join(index) + "\n"
    return files


# --- Go ---------------------------------------------------------------------

_GO_RUNTIME = """\
{preamble}

package know

import (
\t"fmt"
\t"sort"
\t"strings"
)

// RDFType is the rdf:type predicate IRI.
const RDFType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

var datatypes = map[string]string{{
\t"text":     "http://www.w3.org/2001/XMLSchema#string",
\t"integer":  "http://www.w3.org/2001/XMLSchema#integer",
\t"decimal":  "http://www.w3.org/2001/XMLSchema#decimal",
\t"boolean":  "http://www.w3.org/2001/XMLSchema#boolean",
\t"date":     "http://www.w3.org/2001/XMLSchema#date",
\t"datetime": "http://www.w3.org/2001/XMLSchema#dateTime",
\t"iri":      "http://www.w3.org/2001/XMLSchema#anyURI",
}}

func escapeLiteral(value string) string {{
\tvar b strings.Builder
\tfor _, ch := range value {{
\t\tswitch {{
\t\tcase ch == '\\\\':
\t\t\tb.WriteString(`\\\\`)
\t\tcase ch == '"':
\t\t\tb.WriteString(`\\"`)
\t\tcase ch == '\\n':
\t\t\tb.WriteString(`\\n`)
\t\tcase ch == '\\r':
\t\t\tb.WriteString(`\\r`)
\t\tcase ch == '\\t':
\t\t\tb.WriteString(`\\t`)
\t\tcase ch < 0x20:
\t\t\tb.WriteString(fmt.Sprintf(`\\u%04X`, ch))
\t\tdefault:
\t\t\tb.WriteRune(ch)
\t\t}}
\t}}
\treturn b.String()
}}

func formatRef(iri string) string {{
\treturn "<" + iri + ">"
}}

func formatLiteral(lexical, kind string) string {{
\tquoted := `"` + escapeLiteral(lexical) + `"`
\tif kind == "text" {{
\t\treturn quoted
\t}}
\treturn quoted + "^^<" + datatypes[kind] + ">"
}}

func finishTriples(lines []string) string {{
\tsort.Strings(lines)
\tvar b strings.Builder
\tprev := ""
\tfor i, line := range lines {{
\t\tif i > 0 && line == prev {{
\t\t\tcontinue
\t\t}}
\t\tb.WriteString(line)
\t\tb.WriteString("\\n")
\t\tprev = line
\t}}
\treturn b.String()
}}
"""


def _emit_go(ir: list[TypeSpec], profile: TargetProfile) -> dict[str, str]:
    files: dict[str, str] = {"runtime.go": _GO_RUNTIME.format(preamble=profile.preamble)}
    for spec in ir:
        name = _type_name(spec, profile)
        record = name + "Record"
        json_fields = sorted(spec.all_fields, key=_json_key)
        lines = [profile.preamble, "", "package know", ""]
        lines.append('import (')
        lines.append('\t"encoding/json"')
        lines.append('\t"fmt"')
        lines.append(')')
        lines.append("")
        macro = apply_convention(spec.words, NamingConvention.PASCAL)
        lines.append(f'// {macro}TypeIRI identifies the {name} class.')
        lines.append(f'const {macro}TypeIRI = "{spec.class_iri.value}"')
        lines.append("")
        if spec.doc:
            lines.append(f"// {name} is the abstract interface: {spec.doc}")
        else:
            lines.append(f"// {name} is the abstract interface for the generated record.")
        lines.append(f"type {name} interface {{")
        lines.append("\tGetID() string")
        for f in spec.all_fields:
            fname = _field_name(f, profile)
            lines.append(f"\tGet{fname}() {_field_type(f, profile)}")
        lines.append("}")
        lines.append("")
        lines.append(f"// {record} is the default implementation of {name}.")
        lines.append(f"type {record} struct {{")
        lines.append('\tID   string `json:"id"`')
        lines.append('\tType string `json:"type"`')
        for f in json_fields:
            fname = _field_name(f, profile)
            key = _json_key(f)
            lines.append(f'\t{fname} {_field_type(f, profile)} `json:"{key},omitempty"`')
        lines.append("}")
        lines.append("")
        lines.append(f"// New{record} returns an empty record with the type IRI set.")
        lines.append(f"func New{record}(id string) *{record} {{")
        lines.append(f"\treturn &{record}{{ID: id, Type: {macro}TypeIRI}}")
        lines.append("}")
        lines.append("")
        lines.append(f"func (r *{record}) GetID() string {{")
        lines.append("\treturn r.ID")
        lines.append("}")
        for f in spec.all_fields:
            fname = _field_name(f, profile)
            lines.append("")
            lines.append(f"func (r *{record}) Get{fname}() {_field_type(f, profile)} {{")
            lines.append(f"\treturn r.{fname}")
            lines.append("}")
        lines.append("")
        lines.append(f"// ToJSONText renders the canonical JSON instance document.")
        lines.append(f"func (r *{record}) ToJSONText() (string, error) {{")
        lines.append('\tdata, err := json.MarshalIndent(r, "", "  ")')
        lines.append("\tif err != nil {")
        lines.append('\t\treturn "", err')
        lines.append("\t}")
        lines.append('\treturn string(data) + "\\n", nil')
        lines.append("}")
        lines.append("")
        lines.append(f"// {record}FromJSON decodes a canonical JSON instance document.")
        lines.append(f"func {record}FromJSON(text string) (*{record}, error) {{")
        lines.append(f"\tvar r {record}")
        lines.append("\tif err := json.Unmarshal([]byte(text), &r); err != nil {")
        lines.append("\t\treturn nil, err")
        lines.append("\t}")
        lines.append(f"\tif r.Type != {macro}TypeIRI {{")
        lines.append(f'\t\treturn nil, fmt.Errorf("type mismatch: %s", r.Type)')
        lines.append("\t}")
        lines.append("\treturn &r, nil")
        lines.append("}")
        lines.append("")
        lines.append(f"// ToNTriples renders the record as canonical N-Triples.")
        lines.append(f"func (r *{record}) ToNTriples() string {{")
        lines.append("\tlines := []string{")
        lines.append(f'\t\tfmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, {macro}TypeIRI),')
        lines.append("\t}")
        for f in spec.all_fields:
            fname = _field_name(f, profile)
            kind = _kind_token(f)
            if kind == "ref":
                obj = "formatRef(value)"
            elif kind == "text":
                obj = 'formatLiteral(value, "text")'
            else:
                obj = f'formatLiteral(fmt.Sprintf("%v", value), "{kind}")'
            if f.cardinality is Cardinality.OPTIONAL_SINGLE:
                lines.append(f"\tif r.{fname} != nil {{")
                lines.append(f"\t\tvalue := *r.{fname}")
                lines.append(
                    f'\t\tlines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "{f.property_iri.value}", {obj}))'
                )
                lines.append("\t}")
            else:
                lines.append(f"\tfor _, value := range r.{fname} {{")
                lines.append(
                    f'\t\tlines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "{f.property_iri.value}", {obj}))'
                )
                lines.append("\t}")
        lines.append("\treturn finishTriples(lines)")
        lines.append("}")
        files[_file_name(spec, profile)] = "\n".join(lines) + "\n"

    index = [profile.preamble, "", "package know", ""]
    index.append("// TypeNames lists all generated types, sorted.")
    index.append("var TypeNames = []string{")
    for spec in sorted(ir, key=lambda s: _type_name(s, profile)):
        index.append(f'\t"{_type_name(spec, profile)}",')
    index.append("}")
    files["types.go"] = "\n".join(index) + "\n"
    return files


_EMITTERS = {
    "c": _emit_c,
    "py": _emit_py,
    "ts": _emit_ts,
    "rs": _emit_rs,
    "go": _emit_go,
}


# --- reference instance codecs ----------------------------------------------

ScalarValue = Union[str, int, float, bool]
Value = Union[ScalarValue, Iri]


@dataclass
class InstanceRecord:
    """One entity instance: id, type, and property values for interchange."""

    id: Iri
    type: Iri
    values: dict[Iri, list[Value]] = field(default_factory=dict)


class UnknownPropertyError(KeyError):
    def __init__(self, prop: Iri, type_iri: Iri):
        super().__init__(prop.value)
        self.prop = prop
        self.type_iri = type_iri


class CardinalityViolationError(ValueError):
    def __init__(self, prop: Iri):
        super().__init__(f"functional property {prop.value} carries multiple values")
        self.prop = prop


def _checked_properties(rec: InstanceRecord, model: OntologyModel) -> dict[Iri, object]:
    allowed = {p.iri: p for p in effective_properties(model, rec.type)}
    for prop_iri, values in rec.values.items():
        prop = allowed.get(prop_iri)
        if prop is None:
            raise UnknownPropertyError(prop_iri, rec.type)
        if prop.functional and len(values) > 1:
            raise CardinalityViolationError(prop_iri)
    return allowed


def _json_escape(s: str) -> str:
    out = []
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ch == "\b":
            out.append("\\b")
        elif ch == "\f":
            out.append("\\f")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return "".join(out)


def _json_value(v: Value) -> str:
    if isinstance(v, Iri):
        return f'"{_json_escape(v.value)}"'
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        import json as _json

        return _json.dumps(v)
    return f'"{_json_escape(v)}"'


def instance_to_json(rec: InstanceRecord, model: OntologyModel) -> str:
    """JSON instance document: id, type, then camel-keyed members sorted by key.

    Two-space indentation; optional-single values render directly, many as
    arrays; entity references are flat IRI strings.
    """
    allowed = _checked_properties(rec, model)
    members: list[tuple[str, str]] = [
        ("id", _json_value(rec.id)),
        ("type", _json_value(rec.type)),
    ]
    keyed = []
    for prop_iri, values in rec.values.items():
        if not values:
            continue
        prop = allowed[prop_iri]
        key = apply_convention(split_words(prop.local_name), NamingConvention.CAMEL)
        keyed.append((key, prop, values))
    keyed.sort(key=lambda item: item[0])
    for key, prop, values in keyed:
        if prop.functional:
            members.append((key, _json_value(values[0])))
        else:
            rendered = [f"    {_json_value(v)}" for v in values]
            members.append((key, "[\n" + ",\n".join(rendered) + "\n  ]"))
    body = ",\n".join(f'  "{_json_escape(k)}": {v}' for k, v in members)
    return "{\n" + body + "\n}\n"


def instance_from_json(text: str, model: OntologyModel) -> InstanceRecord:
    """Reference decoder for the JSON instance shape; rejects unknown keys."""
    import json as _json

    obj = _json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object")
    if "id" not in obj or "type" not in obj:
        raise ValueError("instance document requires 'id' and 'type'")
    type_iri = Iri(obj["type"])
    props = {
        apply_convention(split_words(p.local_name), NamingConvention.CAMEL): p
        for p in effective_properties(model, type_iri)
    }
    values: dict[Iri, list[Value]] = {}
    for key, raw in obj.items():
        if key in ("id", "type"):
            continue
        prop = props.get(key)
        if prop is None:
            raise UnknownPropertyError(Iri("urn:unknown:" + key), type_iri)
        entity_ranged = any(r in model.classes for r in prop.ranges)
        if prop.functional:
            if isinstance(raw, list):
                raise CardinalityViolationError(prop.iri)
            items = [raw]
        else:
            if not isinstance(raw, list):
                raise ValueError(f"property {key!r} takes an array")
            items = raw
        values[prop.iri] = [
            Iri(item) if entity_ranged and isinstance(item, str) else item
            for item in items
        ]
    return InstanceRecord(id=Iri(obj["id"]), type=type_iri, values=values)


def instance_to_triples(rec: InstanceRecord, model: OntologyModel) -> str:
    """Canonical N-Triples for one instance: a type triple plus one per value."""
    from .ir import map_scalar

    allowed = _checked_properties(rec, model)
    triples = [Triple(rec.id, Iri(RDF_TYPE), rec.type)]
    for prop_iri, values in rec.values.items():
        prop = allowed[prop_iri]
        entity_ranged = any(r in model.classes for r in prop.ranges)
        for v in values:
            if isinstance(v, Iri):
                obj: Union[Iri, Literal] = v
            elif entity_ranged:
                obj = Iri(str(v))
            else:
                kind = map_scalar(prop.ranges[0])
                obj = Literal(_canonical_lexical(v, kind), SCALAR_TO_XSD[kind])
            triples.append(Triple(rec.id, prop_iri, obj))
    return to_ntriples(Graph(triples=triples))


def _canonical_lexical(v: ScalarValue, kind: ScalarKind) -> str:
    if kind is ScalarKind.BOOLEAN:
        return "true" if v else "false"
    if kind is ScalarKind.INTEGER:
        return str(int(v))
    return str(v)
