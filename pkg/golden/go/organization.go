// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// OrganizationTypeIRI identifies the Organization class.
const OrganizationTypeIRI = "https://know.dev/Organization"

// Organization is the abstract interface: Organization
type Organization interface {
	GetID() string
}

// OrganizationRecord is the default implementation of Organization.
type OrganizationRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewOrganizationRecord returns an empty record with the type IRI set.
func NewOrganizationRecord(id string) *OrganizationRecord {
	return &OrganizationRecord{ID: id, Type: OrganizationTypeIRI}
}

func (r *OrganizationRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *OrganizationRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// OrganizationRecordFromJSON decodes a canonical JSON instance document.
func OrganizationRecordFromJSON(text string) (*OrganizationRecord, error) {
	var r OrganizationRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != OrganizationTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *OrganizationRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, OrganizationTypeIRI),
	}
	return finishTriples(lines)
}
