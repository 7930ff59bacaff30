// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// PartyTypeIRI identifies the Party class.
const PartyTypeIRI = "https://know.dev/Party"

// Party is the abstract interface: Party
type Party interface {
	GetID() string
}

// PartyRecord is the default implementation of Party.
type PartyRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewPartyRecord returns an empty record with the type IRI set.
func NewPartyRecord(id string) *PartyRecord {
	return &PartyRecord{ID: id, Type: PartyTypeIRI}
}

func (r *PartyRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *PartyRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// PartyRecordFromJSON decodes a canonical JSON instance document.
func PartyRecordFromJSON(text string) (*PartyRecord, error) {
	var r PartyRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != PartyTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *PartyRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, PartyTypeIRI),
	}
	return finishTriples(lines)
}
