// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Place, PlaceRecord } from "./place";

/** Hospital */
export interface Hospital extends Place {
}

const FIELDS: FieldDef[] = [
];

export class HospitalRecord extends PlaceRecord implements Hospital {
  static readonly TYPE_IRI: string = "https://know.dev/Hospital";

  constructor(id: string, init: Partial<Hospital> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return HospitalRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): HospitalRecord {
    const decoded = decodeInstance(text, HospitalRecord.TYPE_IRI, FIELDS);
    return new HospitalRecord(decoded.id, decoded.values as Partial<Hospital>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
