// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";

/** A person, real or fictional. */
export interface Person {
  id: string;
  age: number | null;
  aunt: string[];
  brother: string[];
  child: string[];
  father: string | null;
  mother: string | null;
  name: string | null;
  nephew: string[];
  niece: string[];
  parent: string[];
  sibling: string[];
  sister: string[];
  uncle: string[];
}

const FIELDS: FieldDef[] = [
  { attr: "age", key: "age", iri: "https://know.dev/age", kind: "integer", many: false },
  { attr: "aunt", key: "aunt", iri: "https://know.dev/aunt", kind: "ref", many: true },
  { attr: "brother", key: "brother", iri: "https://know.dev/brother", kind: "ref", many: true },
  { attr: "child", key: "child", iri: "https://know.dev/child", kind: "ref", many: true },
  { attr: "father", key: "father", iri: "https://know.dev/father", kind: "ref", many: false },
  { attr: "mother", key: "mother", iri: "https://know.dev/mother", kind: "ref", many: false },
  { attr: "name", key: "name", iri: "https://know.dev/name", kind: "text", many: false },
  { attr: "nephew", key: "nephew", iri: "https://know.dev/nephew", kind: "ref", many: true },
  { attr: "niece", key: "niece", iri: "https://know.dev/niece", kind: "ref", many: true },
  { attr: "parent", key: "parent", iri: "https://know.dev/parent", kind: "ref", many: true },
  { attr: "sibling", key: "sibling", iri: "https://know.dev/sibling", kind: "ref", many: true },
  { attr: "sister", key: "sister", iri: "https://know.dev/sister", kind: "ref", many: true },
  { attr: "uncle", key: "uncle", iri: "https://know.dev/uncle", kind: "ref", many: true },
];

export class PersonRecord implements Person {
  static readonly TYPE_IRI: string = "https://know.dev/Person";
  id: string;
  age: number | null = null;
  aunt: string[] = [];
  brother: string[] = [];
  child: string[] = [];
  father: string | null = null;
  mother: string | null = null;
  name: string | null = null;
  nephew: string[] = [];
  niece: string[] = [];
  parent: string[] = [];
  sibling: string[] = [];
  sister: string[] = [];
  uncle: string[] = [];

  constructor(id: string, init: Partial<Person> = {}) {
    this.id = id;
    Object.assign(this, init);
  }

  protected typeIri(): string {
    return PersonRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): PersonRecord {
    const decoded = decodeInstance(text, PersonRecord.TYPE_IRI, FIELDS);
    return new PersonRecord(decoded.id, decoded.values as Partial<Person>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
