// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Event, EventRecord } from "./event";

/** Party */
export interface Party extends Event {
}

const FIELDS: FieldDef[] = [
];

export class PartyRecord extends EventRecord implements Party {
  static readonly TYPE_IRI: string = "https://know.dev/Party";

  constructor(id: string, init: Partial<Party> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return PartyRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): PartyRecord {
    const decoded = decodeInstance(text, PartyRecord.TYPE_IRI, FIELDS);
    return new PartyRecord(decoded.id, decoded.values as Partial<Party>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
