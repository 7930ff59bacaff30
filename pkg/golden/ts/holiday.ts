// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Event, EventRecord } from "./event";

/** Holiday */
export interface Holiday extends Event {
}

const FIELDS: FieldDef[] = [
];

export class HolidayRecord extends EventRecord implements Holiday {
  static readonly TYPE_IRI: string = "https://know.dev/Holiday";

  constructor(id: string, init: Partial<Holiday> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return HolidayRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): HolidayRecord {
    const decoded = decodeInstance(text, HolidayRecord.TYPE_IRI, FIELDS);
    return new HolidayRecord(decoded.id, decoded.values as Partial<Holiday>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
