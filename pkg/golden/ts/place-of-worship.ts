// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Place, PlaceRecord } from "./place";

/** Place of worship */
export interface PlaceOfWorship extends Place {
}

const FIELDS: FieldDef[] = [
];

export class PlaceOfWorshipRecord extends PlaceRecord implements PlaceOfWorship {
  static readonly TYPE_IRI: string = "https://know.dev/PlaceOfWorship";

  constructor(id: string, init: Partial<PlaceOfWorship> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return PlaceOfWorshipRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): PlaceOfWorshipRecord {
    const decoded = decodeInstance(text, PlaceOfWorshipRecord.TYPE_IRI, FIELDS);
    return new PlaceOfWorshipRecord(decoded.id, decoded.values as Partial<PlaceOfWorship>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
