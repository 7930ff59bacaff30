// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

//! Runtime support for the generated SDK: N-Triples formatting helpers.

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

pub fn datatype_iri(kind: &str) -> &'static str {
    match kind {
        "integer" => "http://www.w3.org/2001/XMLSchema#integer",
        "decimal" => "http://www.w3.org/2001/XMLSchema#decimal",
        "boolean" => "http://www.w3.org/2001/XMLSchema#boolean",
        "date" => "http://www.w3.org/2001/XMLSchema#date",
        "datetime" => "http://www.w3.org/2001/XMLSchema#dateTime",
        "iri" => "http://www.w3.org/2001/XMLSchema#anyURI",
        _ => "http://www.w3.org/2001/XMLSchema#string",
    }
}

pub fn escape_literal(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for ch in value.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04X}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

pub fn format_ref(iri: &str) -> String {
    format!("<{}>", iri)
}

pub fn format_literal(lexical: &str, kind: &str) -> String {
    let quoted = format!("\"{}\"", escape_literal(lexical));
    if kind == "text" {
        quoted
    } else {
        format!("{}^^<{}>", quoted, datatype_iri(kind))
    }
}

pub fn finish_triples(mut lines: Vec<String>) -> String {
    lines.sort();
    lines.dedup();
    lines.into_iter().map(|l| l + "\n").collect()
}
