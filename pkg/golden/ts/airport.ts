// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Place, PlaceRecord } from "./place";

/** Airport */
export interface Airport extends Place {
}

const FIELDS: FieldDef[] = [
];

export class AirportRecord extends PlaceRecord implements Airport {
  static readonly TYPE_IRI: string = "https://know.dev/Airport";

  constructor(id: string, init: Partial<Airport> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return AirportRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): AirportRecord {
    const decoded = decodeInstance(text, AirportRecord.TYPE_IRI, FIELDS);
    return new AirportRecord(decoded.id, decoded.values as Partial<Airport>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
