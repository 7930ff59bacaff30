// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// PlaceOfWorshipTypeIRI identifies the PlaceOfWorship class.
const PlaceOfWorshipTypeIRI = "https://know.dev/PlaceOfWorship"

// PlaceOfWorship is the abstract interface: Place of worship
type PlaceOfWorship interface {
	GetID() string
}

// PlaceOfWorshipRecord is the default implementation of PlaceOfWorship.
type PlaceOfWorshipRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewPlaceOfWorshipRecord returns an empty record with the type IRI set.
func NewPlaceOfWorshipRecord(id string) *PlaceOfWorshipRecord {
	return &PlaceOfWorshipRecord{ID: id, Type: PlaceOfWorshipTypeIRI}
}

func (r *PlaceOfWorshipRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *PlaceOfWorshipRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// PlaceOfWorshipRecordFromJSON decodes a canonical JSON instance document.
func PlaceOfWorshipRecordFromJSON(text string) (*PlaceOfWorshipRecord, error) {
	var r PlaceOfWorshipRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != PlaceOfWorshipTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *PlaceOfWorshipRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, PlaceOfWorshipTypeIRI),
	}
	return finishTriples(lines)
}
