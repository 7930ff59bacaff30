// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// AirportTypeIRI identifies the Airport class.
const AirportTypeIRI = "https://know.dev/Airport"

// Airport is the abstract interface: Airport
type Airport interface {
	GetID() string
}

// AirportRecord is the default implementation of Airport.
type AirportRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewAirportRecord returns an empty record with the type IRI set.
func NewAirportRecord(id string) *AirportRecord {
	return &AirportRecord{ID: id, Type: AirportTypeIRI}
}

func (r *AirportRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *AirportRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// AirportRecordFromJSON decodes a canonical JSON instance document.
func AirportRecordFromJSON(text string) (*AirportRecord, error) {
	var r AirportRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != AirportTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *AirportRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, AirportTypeIRI),
	}
	return finishTriples(lines)
}
