// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";

/** A group of people. */
export interface Group {
  id: string;
}

const FIELDS: FieldDef[] = [
];

export class GroupRecord implements Group {
  static readonly TYPE_IRI: string = "https://know.dev/Group";
  id: string;

  constructor(id: string, init: Partial<Group> = {}) {
    this.id = id;
    Object.assign(this, init);
  }

  protected typeIri(): string {
    return GroupRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): GroupRecord {
    const decoded = decodeInstance(text, GroupRecord.TYPE_IRI, FIELDS);
    return new GroupRecord(decoded.id, decoded.values as Partial<Group>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
