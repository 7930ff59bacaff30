// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";

/** Organization */
export interface Organization {
  id: string;
}

const FIELDS: FieldDef[] = [
];

export class OrganizationRecord implements Organization {
  static readonly TYPE_IRI: string = "https://know.dev/Organization";
  id: string;

  constructor(id: string, init: Partial<Organization> = {}) {
    this.id = id;
    Object.assign(this, init);
  }

  protected typeIri(): string {
    return OrganizationRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): OrganizationRecord {
    const decoded = decodeInstance(text, OrganizationRecord.TYPE_IRI, FIELDS);
    return new OrganizationRecord(decoded.id, decoded.values as Partial<Organization>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
