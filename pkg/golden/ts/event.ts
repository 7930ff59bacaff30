// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";

/** Event */
export interface Event {
  id: string;
}

const FIELDS: FieldDef[] = [
];

export class EventRecord implements Event {
  static readonly TYPE_IRI: string = "https://know.dev/Event";
  id: string;

  constructor(id: string, init: Partial<Event> = {}) {
    this.id = id;
    Object.assign(this, init);
  }

  protected typeIri(): string {
    return EventRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): EventRecord {
    const decoded = decodeInstance(text, EventRecord.TYPE_IRI, FIELDS);
    return new EventRecord(decoded.id, decoded.values as Partial<Event>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
