// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Place, PlaceRecord } from "./place";

/** Hotel */
export interface Hotel extends Place {
}

const FIELDS: FieldDef[] = [
];

export class HotelRecord extends PlaceRecord implements Hotel {
  static readonly TYPE_IRI: string = "https://know.dev/Hotel";

  constructor(id: string, init: Partial<Hotel> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return HotelRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): HotelRecord {
    const decoded = decodeInstance(text, HotelRecord.TYPE_IRI, FIELDS);
    return new HotelRecord(decoded.id, decoded.values as Partial<Hotel>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
