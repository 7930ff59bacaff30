// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Event, EventRecord } from "./event";

/** Birthday */
export interface Birthday extends Event {
}

const FIELDS: FieldDef[] = [
];

export class BirthdayRecord extends EventRecord implements Birthday {
  static readonly TYPE_IRI: string = "https://know.dev/Birthday";

  constructor(id: string, init: Partial<Birthday> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return BirthdayRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): BirthdayRecord {
    const decoded = decodeInstance(text, BirthdayRecord.TYPE_IRI, FIELDS);
    return new BirthdayRecord(decoded.id, decoded.values as Partial<Birthday>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
