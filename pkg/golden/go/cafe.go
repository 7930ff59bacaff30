// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// CafeTypeIRI identifies the Cafe class.
const CafeTypeIRI = "https://know.dev/Cafe"

// Cafe is the abstract interface: Cafe
type Cafe interface {
	GetID() string
}

// CafeRecord is the default implementation of Cafe.
type CafeRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewCafeRecord returns an empty record with the type IRI set.
func NewCafeRecord(id string) *CafeRecord {
	return &CafeRecord{ID: id, Type: CafeTypeIRI}
}

func (r *CafeRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *CafeRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// CafeRecordFromJSON decodes a canonical JSON instance document.
func CafeRecordFromJSON(text string) (*CafeRecord, error) {
	var r CafeRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != CafeTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *CafeRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, CafeTypeIRI),
	}
	return finishTriples(lines)
}
