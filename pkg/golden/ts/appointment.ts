// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Event, EventRecord } from "./event";

/** Appointment */
export interface Appointment extends Event {
}

const FIELDS: FieldDef[] = [
];

export class AppointmentRecord extends EventRecord implements Appointment {
  static readonly TYPE_IRI: string = "https://know.dev/Appointment";

  constructor(id: string, init: Partial<Appointment> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return AppointmentRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): AppointmentRecord {
    const decoded = decodeInstance(text, AppointmentRecord.TYPE_IRI, FIELDS);
    return new AppointmentRecord(decoded.id, decoded.values as Partial<Appointment>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
