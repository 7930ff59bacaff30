// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

/** One serializable field: attribute, JSON key, property IRI, scalar kind. */
export interface FieldDef {
  attr: string;
  key: string;
  iri: string;
  kind: string;
  many: boolean;
}

export const RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

const DATATYPES: Record<string, string> = {
  text: "http://www.w3.org/2001/XMLSchema#string",
  integer: "http://www.w3.org/2001/XMLSchema#integer",
  decimal: "http://www.w3.org/2001/XMLSchema#decimal",
  boolean: "http://www.w3.org/2001/XMLSchema#boolean",
  date: "http://www.w3.org/2001/XMLSchema#date",
  datetime: "http://www.w3.org/2001/XMLSchema#dateTime",
  iri: "http://www.w3.org/2001/XMLSchema#anyURI",
};

export function escapeLiteral(value: string): string {
  let out = "";
  for (const ch of value) {
    const code = ch.codePointAt(0) as number;
    if (ch === "\\") out += "\\\\";
    else if (ch === '"') out += '\\"';
    else if (ch === "\n") out += "\\n";
    else if (ch === "\r") out += "\\r";
    else if (ch === "\t") out += "\\t";
    else if (code < 0x20) out += "\\u" + code.toString(16).toUpperCase().padStart(4, "0");
    else out += ch;
  }
  return out;
}

export function formatObject(value: unknown, kind: string): string {
  if (kind === "ref") return `<${value}>`;
  let lexical: string;
  if (kind === "boolean") lexical = value ? "true" : "false";
  else lexical = String(value);
  const quoted = `"${escapeLiteral(lexical)}"`;
  if (kind === "text") return quoted;
  return `${quoted}^^<${DATATYPES[kind]}>`;
}

export function encodeInstance(
  id: string,
  typeIri: string,
  fields: FieldDef[],
  values: Record<string, unknown>,
): string {
  const obj: Record<string, unknown> = { id, type: typeIri };
  const sorted = [...fields].sort((a, b) => (a.key < b.key ? -1 : a.key > b.key ? 1 : 0));
  for (const f of sorted) {
    const v = values[f.attr];
    if (f.many) {
      if (Array.isArray(v) && v.length > 0) obj[f.key] = v;
    } else if (v !== null && v !== undefined) {
      obj[f.key] = v;
    }
  }
  return JSON.stringify(obj, null, 2) + "\n";
}

export function decodeInstance(
  text: string,
  typeIri: string,
  fields: FieldDef[],
): { id: string; values: Record<string, unknown> } {
  const obj = JSON.parse(text) as Record<string, unknown>;
  if (typeof obj !== "object" || obj === null) throw new Error("expected a JSON object");
  if (obj["type"] !== typeIri) {
    throw new Error(`type mismatch: expected ${typeIri}, found ${obj["type"]}`);
  }
  if (typeof obj["id"] !== "string") throw new Error("missing 'id' member");
  const byKey = new Map(fields.map((f) => [f.key, f]));
  const values: Record<string, unknown> = {};
  for (const key of Object.keys(obj)) {
    if (key === "id" || key === "type") continue;
    const f = byKey.get(key);
    if (f === undefined) throw new Error(`unknown property key '${key}'`);
    if (f.many && !Array.isArray(obj[key])) throw new Error(`property '${key}' takes an array`);
    if (!f.many && Array.isArray(obj[key])) throw new Error(`property '${key}' takes a single value`);
    values[f.attr] = obj[key];
  }
  return { id: obj["id"], values };
}

export function instanceTriples(
  id: string,
  typeIri: string,
  fields: FieldDef[],
  values: Record<string, unknown>,
): string {
  const lines = [`<${id}> <${RDF_TYPE}> <${typeIri}> .`];
  for (const f of fields) {
    const v = values[f.attr];
    const items = f.many ? ((v as unknown[]) ?? []) : v === null || v === undefined ? [] : [v];
    for (const item of items) {
      lines.push(`<${id}> <${f.iri}> ${formatObject(item, f.kind)} .`);
    }
  }
  return [...new Set(lines)].sort().map((l) => l + "\n").join("");
}
