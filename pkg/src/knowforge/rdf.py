"""RDF terms, a Turtle-subset parser, and a canonical N-Triples serializer.

The parser covers the slice of Turtle needed for OWL vocabularies:
@prefix/@base (and SPARQL-style PREFIX/BASE), IRIs, prefixed names,
plain/long string literals with datatype or language tag, integer,
decimal, and boolean shorthand, `a`, object and predicate lists,
blank-node property lists, and RDF collections. RDF-star is not
supported.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union
from urllib.parse import urljoin

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"
RDF_LANGSTRING = RDF_NS + "langString"

XSD_NS = "http://www.w3.org/2001/XMLSchema#"
XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_BOOLEAN = XSD_NS + "boolean"

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


@dataclass(frozen=True, order=True)
class Iri:
    """An absolute IRI, stored without angle brackets."""

    value: str

    def __post_init__(self) -> None:
        if not self.value or ":" not in self.value:
            raise ValueError(f"not an absolute IRI: {self.value!r}")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class BlankNode:
    """A blank node; the label carries no `_:` prefix."""

    label: str


@dataclass(frozen=True, order=True)
class Literal:
    lexical: str
    datatype: Iri = Iri(XSD_STRING)
    language: Optional[str] = None

    def __post_init__(self) -> None:
        if self.language is not None and self.datatype.value != RDF_LANGSTRING:
            raise ValueError("language tag requires the rdf:langString datatype")


Term = Union[Iri, BlankNode, Literal]
Subject = Union[Iri, BlankNode]


@dataclass(frozen=True, order=True)
class Triple:
    subject: Subject
    predicate: Iri
    object: Term


@dataclass(frozen=True)
class SourceLocation:
    line: int
    column: int

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 1:
            raise ValueError("line and column are 1-based")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass
class Graph:
    """Parsed RDF content plus its prefix and base-IRI context."""

    triples: list[Triple] = field(default_factory=list)
    prefixes: dict[str, Iri] = field(default_factory=dict)
    base: Optional[Iri] = None


class ParseError(Exception):
    """Base for all Turtle parse failures; carries a 1-based source location."""

    def __init__(self, message: str, location: SourceLocation):
        super().__init__(f"{location}: {message}")
        self.message = message
        self.location = location


class TurtleSyntaxError(ParseError):
    pass


class UndefinedPrefixError(ParseError):
    def __init__(self, label: str, location: SourceLocation):
        super().__init__(f"undefined prefix '{label}:'", location)
        self.label = label


class RelativeIriError(ParseError):
    def __init__(self, iri: str, location: SourceLocation):
        super().__init__(f"relative IRI <{iri}> without a base", location)
        self.iri = iri


# --- tokenizer ------------------------------------------------------------

_TOKEN_SPECS = [
    ("COMMENT", r"#[^\n]*"),
    ("WS", r"[ \t\r\n]+"),
    ("IRIREF", r"<[^<>\"{}|^`\\\x00-\x20]*>"),
    ("STRING_LONG2", r'"""(?:[^"\\]|\\.|"(?!""))*"""'),
    ("STRING_LONG1", r"'''(?:[^'\\]|\\.|'(?!''))*'''"),
    ("STRING2", r'"(?:[^"\\\n\r]|\\.)*"'),
    ("STRING1", r"'(?:[^'\\\n\r]|\\.)*'"),
    ("LANGTAG", r"@[a-zA-Z]+(?:-[a-zA-Z0-9]+)*"),
    ("DOUBLE_CARET", r"\^\^"),
    ("BLANK", r"_:[A-Za-z0-9_][A-Za-z0-9_.\-]*"),
    ("DECIMAL", r"[+-]?[0-9]*\.[0-9]+"),
    ("INTEGER", r"[+-]?[0-9]+"),
    # PNAME also matches bare keywords (a, true, prefix); classified later.
    ("PNAME", r"(?:[A-Za-z][A-Za-z0-9_\-]*)?:(?:[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)?"
              r"|[A-Za-z][A-Za-z0-9_\-]*"),
    ("PUNCT", r"[.;,\[\]()]"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pat})" for name, pat in _TOKEN_SPECS))


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    location: SourceLocation


def _tokenize(text: str) -> Iterator[_Token]:
    pos = 0
    line = 1
    line_start = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        loc = SourceLocation(line, pos - line_start + 1)
        if m is None:
            raise TurtleSyntaxError(f"unexpected character {text[pos]!r}", loc)
        kind = m.lastgroup
        tok = m.group()
        if kind in ("WS", "COMMENT"):
            pass
        else:
            yield _Token(kind, tok, loc)
        for i, ch in enumerate(tok):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    yield _Token("EOF", "", SourceLocation(line, pos - line_start + 1))


_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}


def _unescape(raw: str, location: SourceLocation) -> str:
    out: list[str] = []
    i = 0
    n = len(raw)
    while i < n:
        ch = raw[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= n:
            raise TurtleSyntaxError("dangling escape in string literal", location)
        esc = raw[i + 1]
        if esc in _ESCAPES:
            out.append(_ESCAPES[esc])
            i += 2
        elif esc in ("u", "U"):
            width = 4 if esc == "u" else 8
            hexpart = raw[i + 2 : i + 2 + width]
            if len(hexpart) != width or not re.fullmatch(r"[0-9A-Fa-f]+", hexpart):
                raise TurtleSyntaxError(f"bad \\{esc} escape", location)
            out.append(chr(int(hexpart, 16)))
            i += 2 + width
        else:
            raise TurtleSyntaxError(f"unknown escape \\{esc}", location)
    return "".join(out)


# --- parser ---------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, base: Optional[Iri]):
        self.tokens = list(_tokenize(text))
        self.pos = 0
        self.graph = Graph(base=base)
        self.base = base
        self.blank_counter = 0
        # Explicit labels anywhere in the document; generated labels avoid them.
        self.used_labels: set[str] = {
            t.text[2:] for t in self.tokens if t.kind == "BLANK"
        }

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_punct(self, ch: str) -> _Token:
        tok = self.next()
        if tok.kind != "PUNCT" or tok.text != ch:
            raise TurtleSyntaxError(f"expected {ch!r}, found {tok.text!r}", tok.location)
        return tok

    def fresh_blank(self) -> BlankNode:
        while True:
            label = f"b{self.blank_counter}"
            self.blank_counter += 1
            if label not in self.used_labels:
                return BlankNode(label)

    def resolve_iri(self, raw: str, location: SourceLocation) -> Iri:
        if _SCHEME_RE.match(raw):
            return Iri(raw)
        if self.base is None:
            raise RelativeIriError(raw, location)
        return Iri(urljoin(self.base.value, raw))

    def expand_pname(self, text: str, location: SourceLocation) -> Iri:
        label, _, local = text.partition(":")
        ns = self.graph.prefixes.get(label)
        if ns is None:
            raise UndefinedPrefixError(label, location)
        return Iri(ns.value + local)

    def parse(self) -> Graph:
        while True:
            tok = self.peek()
            if tok.kind == "EOF":
                break
            if tok.kind == "LANGTAG" and tok.text in ("@prefix", "@base"):
                self.next()
                self.parse_directive(tok.text[1:], turtle_style=True)
            elif tok.kind == "PNAME" and ":" not in tok.text and tok.text.lower() in ("prefix", "base"):
                self.next()
                self.parse_directive(tok.text.lower(), turtle_style=False)
            else:
                self.parse_statement()
        return self.graph

    def parse_directive(self, kind: str, turtle_style: bool) -> None:
        if kind == "prefix":
            tok = self.next()
            if tok.kind != "PNAME" or not tok.text.endswith(":"):
                raise TurtleSyntaxError("expected prefix label ending in ':'", tok.location)
            label = tok.text[:-1]
            iri_tok = self.next()
            if iri_tok.kind != "IRIREF":
                raise TurtleSyntaxError("expected IRI in prefix directive", iri_tok.location)
            iri = self.resolve_iri(iri_tok.text[1:-1], iri_tok.location)
            self.graph.prefixes[label] = iri
        else:
            iri_tok = self.next()
            if iri_tok.kind != "IRIREF":
                raise TurtleSyntaxError("expected IRI in base directive", iri_tok.location)
            raw = iri_tok.text[1:-1]
            if _SCHEME_RE.match(raw):
                self.base = Iri(raw)
            elif self.base is not None:
                self.base = Iri(urljoin(self.base.value, raw))
            else:
                raise RelativeIriError(raw, iri_tok.location)
            self.graph.base = self.base
        if turtle_style:
            self.expect_punct(".")

    def parse_statement(self) -> None:
        tok = self.peek()
        if tok.kind == "PUNCT" and tok.text == "[":
            subject: Subject = self.parse_blank_property_list()
            # A bare blank-node property list may end the statement directly.
            if self.peek().kind == "PUNCT" and self.peek().text == ".":
                self.next()
                return
        else:
            subject = self.parse_subject()
        self.parse_predicate_object_list(subject)
        self.expect_punct(".")

    def parse_subject(self) -> Subject:
        tok = self.next()
        if tok.kind == "IRIREF":
            return self.resolve_iri(tok.text[1:-1], tok.location)
        if tok.kind == "PNAME" and ":" in tok.text:
            return self.expand_pname(tok.text, tok.location)
        if tok.kind == "BLANK":
            label = tok.text[2:]
            self.used_labels.add(label)
            return BlankNode(label)
        if tok.kind == "PUNCT" and tok.text == "(":
            return self.parse_collection(tok.location)
        raise TurtleSyntaxError(f"expected subject, found {tok.text!r}", tok.location)

    def parse_predicate(self) -> Iri:
        tok = self.next()
        if tok.kind == "PNAME" and tok.text == "a":
            return Iri(RDF_TYPE)
        if tok.kind == "IRIREF":
            return self.resolve_iri(tok.text[1:-1], tok.location)
        if tok.kind == "PNAME" and ":" in tok.text:
            return self.expand_pname(tok.text, tok.location)
        raise TurtleSyntaxError(f"expected predicate, found {tok.text!r}", tok.location)

    def parse_predicate_object_list(self, subject: Subject) -> None:
        while True:
            predicate = self.parse_predicate()
            while True:
                obj = self.parse_object()
                self.graph.triples.append(Triple(subject, predicate, obj))
                if self.peek().kind == "PUNCT" and self.peek().text == ",":
                    self.next()
                    continue
                break
            if self.peek().kind == "PUNCT" and self.peek().text == ";":
                self.next()
                # Trailing semicolons before `.` or `]` are legal Turtle.
                nxt = self.peek()
                if nxt.kind == "PUNCT" and nxt.text in (".", "]", ";"):
                    while self.peek().kind == "PUNCT" and self.peek().text == ";":
                        self.next()
                    if self.peek().kind == "PUNCT" and self.peek().text in (".", "]"):
                        return
                continue
            return

    def parse_object(self) -> Term:
        tok = self.peek()
        if tok.kind == "PUNCT" and tok.text == "[":
            return self.parse_blank_property_list()
        if tok.kind == "PUNCT" and tok.text == "(":
            self.next()
            return self.parse_collection(tok.location)
        self.next()
        if tok.kind == "IRIREF":
            return self.resolve_iri(tok.text[1:-1], tok.location)
        if tok.kind == "BLANK":
            label = tok.text[2:]
            self.used_labels.add(label)
            return BlankNode(label)
        if tok.kind in ("STRING2", "STRING1", "STRING_LONG2", "STRING_LONG1"):
            quote = 3 if tok.kind.startswith("STRING_LONG") else 1
            lexical = _unescape(tok.text[quote:-quote], tok.location)
            nxt = self.peek()
            if nxt.kind == "LANGTAG":
                self.next()
                return Literal(lexical, Iri(RDF_LANGSTRING), nxt.text[1:])
            if nxt.kind == "DOUBLE_CARET":
                self.next()
                dt_tok = self.next()
                if dt_tok.kind == "IRIREF":
                    dt = self.resolve_iri(dt_tok.text[1:-1], dt_tok.location)
                elif dt_tok.kind == "PNAME" and ":" in dt_tok.text:
                    dt = self.expand_pname(dt_tok.text, dt_tok.location)
                else:
                    raise TurtleSyntaxError("expected datatype IRI after '^^'", dt_tok.location)
                return Literal(lexical, dt)
            return Literal(lexical)
        if tok.kind == "INTEGER":
            return Literal(tok.text, Iri(XSD_INTEGER))
        if tok.kind == "DECIMAL":
            return Literal(tok.text, Iri(XSD_DECIMAL))
        if tok.kind == "PNAME" and tok.text in ("true", "false"):
            return Literal(tok.text, Iri(XSD_BOOLEAN))
        if tok.kind == "PNAME" and ":" in tok.text:
            return self.expand_pname(tok.text, tok.location)
        raise TurtleSyntaxError(f"expected object, found {tok.text!r}", tok.location)

    def parse_blank_property_list(self) -> BlankNode:
        self.expect_punct("[")
        node = self.fresh_blank()
        nxt = self.peek()
        if not (nxt.kind == "PUNCT" and nxt.text == "]"):
            self.parse_predicate_object_list(node)
        self.expect_punct("]")
        return node

    def parse_collection(self, location: SourceLocation) -> Term:
        items: list[Term] = []
        while True:
            tok = self.peek()
            if tok.kind == "EOF":
                raise TurtleSyntaxError("unterminated collection", location)
            if tok.kind == "PUNCT" and tok.text == ")":
                self.next()
                break
            items.append(self.parse_object())
        if not items:
            return Iri(RDF_NIL)
        nodes = [self.fresh_blank() for _ in items]
        for i, (node, item) in enumerate(zip(nodes, items)):
            self.graph.triples.append(Triple(node, Iri(RDF_FIRST), item))
            rest: Term = nodes[i + 1] if i + 1 < len(nodes) else Iri(RDF_NIL)
            self.graph.triples.append(Triple(node, Iri(RDF_REST), rest))
        return nodes[0]


def parse_turtle(text: str, base: Optional[Iri] = None) -> Graph:
    """Parse a Turtle document into a Graph.

    Triples come back in document order; anonymous blank nodes are labeled
    b0, b1, ... in encounter order, so two parses of the same text are
    identical.
    """
    return _Parser(text, base).parse()


# --- canonical N-Triples --------------------------------------------------

def _escape_literal(s: str) -> str:
    out = []
    for ch in s:
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
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def _format_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    lex = f'"{_escape_literal(term.lexical)}"'
    if term.language is not None:
        return f"{lex}@{term.language}"
    if term.datatype.value == XSD_STRING:
        return lex
    return f"{lex}^^<{term.datatype.value}>"


def format_triple(triple: Triple) -> str:
    return (f"{_format_term(triple.subject)} {_format_term(triple.predicate)} "
            f"{_format_term(triple.object)} .")


def to_ntriples(graph: Graph) -> str:
    """Serialize a graph as canonical N-Triples: one sorted line per triple."""
    lines = sorted(format_triple(t) for t in set(graph.triples))
    return "".join(line + "\n" for line in lines)
