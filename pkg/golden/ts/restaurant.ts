// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

import { FieldDef, decodeInstance, encodeInstance, instanceTriples } from "./runtime";
import { Place, PlaceRecord } from "./place";

/** Restaurant */
export interface Restaurant extends Place {
}

const FIELDS: FieldDef[] = [
];

export class RestaurantRecord extends PlaceRecord implements Restaurant {
  static readonly TYPE_IRI: string = "https://know.dev/Restaurant";

  constructor(id: string, init: Partial<Restaurant> = {}) {
    super(id, init);
  }

  protected typeIri(): string {
    return RestaurantRecord.TYPE_IRI;
  }

  protected fieldDefs(): FieldDef[] {
    return FIELDS;
  }

  toJsonText(): string {
    return encodeInstance(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }

  static fromJsonText(text: string): RestaurantRecord {
    const decoded = decodeInstance(text, RestaurantRecord.TYPE_IRI, FIELDS);
    return new RestaurantRecord(decoded.id, decoded.values as Partial<Restaurant>);
  }

  toNTriples(): string {
    return instanceTriples(this.id, this.typeIri(), this.fieldDefs(), this as unknown as Record<string, unknown>);
  }
}
