// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Place, PlaceRecord } from "./place";

/** Cafe */
export interface Cafe extends Place {
}

const FIELDS: FieldDef[] = [
];

export class CafeRecord extends PlaceRecord implements Cafe {
  static readonly TYPE_IRI: string = "https://know.dev/Cafe";

  constructor(id: string, init: Partial<Cafe> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return CafeRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): CafeRecord {
    const decoded = decodeInstance(text, CafeRecord.TYPE_IRI, FIELDS);
    return new CafeRecord(decoded.id, decoded.values as Partial<Cafe>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
