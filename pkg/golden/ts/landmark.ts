// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Place, PlaceRecord } from "./place";

/** Landmark */
export interface Landmark extends Place {
}

const FIELDS: FieldDef[] = [
];

export class LandmarkRecord extends PlaceRecord implements Landmark {
  static readonly TYPE_IRI: string = "https://know.dev/Landmark";

  constructor(id: string, init: Partial<Landmark> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return LandmarkRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): LandmarkRecord {
    const decoded = decodeInstance(text, LandmarkRecord.TYPE_IRI, FIELDS);
    return new LandmarkRecord(decoded.id, decoded.values as Partial<Landmark>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
