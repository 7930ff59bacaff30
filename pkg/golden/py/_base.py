# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.
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


_DATATYPES = {
    "text": "http://www.w3.org/2001/XMLSchema#string",
    "integer": "http://www.w3.org/2001/XMLSchema#integer",
    "decimal": "http://www.w3.org/2001/XMLSchema#decimal",
    "boolean": "http://www.w3.org/2001/XMLSchema#boolean",
    "date": "http://www.w3.org/2001/XMLSchema#date",
    "datetime": "http://www.w3.org/2001/XMLSchema#dateTime",
    "iri": "http://www.w3.org/2001/XMLSchema#anyURI",
}

_RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"


def _escape_literal(value):
    out = []
    for ch in value:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append("\\u%04X" % ord(ch))
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
        by_attr = {f.attr: f for f in self.FIELDS}
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
        obj = {"id": self.id, "type": self.TYPE_IRI}
        for f in sorted(self.FIELDS, key=lambda f: f.key):
            value = getattr(self, f.attr)
            if f.many:
                if value:
                    obj[f.key] = list(value)
            elif value is not None:
                obj[f.key] = value
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"

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
        by_key = {f.key: f for f in cls.FIELDS}
        values = {}
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
        return "".join(line + "\n" for line in sorted(set(lines)))
