// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";

/** Place */
export interface Place {
  id: string;
}

const FIELDS: FieldDef[] = [
];

export class PlaceRecord implements Place {
  static readonly TYPE_IRI: string = "https://know.dev/Place";
  id: string;

  constructor(id: string, init: Partial<Place> = {}) {
    this.id = id;
    Object.assign(this, init);
  }

  protected typeIri(): string {
    return PlaceRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): PlaceRecord {
    const decoded = decodeInstance(text, PlaceRecord.TYPE_IRI, FIELDS);
    return new PlaceRecord(decoded.id, decoded.values as Partial<Place>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
