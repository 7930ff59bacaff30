// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Event, EventRecord } from "./event";

/** Meeting */
export interface Meeting extends Event {
}

const FIELDS: FieldDef[] = [
];

export class MeetingRecord extends EventRecord implements Meeting {
  static readonly TYPE_IRI: string = "https://know.dev/Meeting";

  constructor(id: string, init: Partial<Meeting> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return MeetingRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): MeetingRecord {
    const decoded = decodeInstance(text, MeetingRecord.TYPE_IRI, FIELDS);
    return new MeetingRecord(decoded.id, decoded.values as Partial<Meeting>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
