// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// PlaceTypeIRI identifies the Place class.
const PlaceTypeIRI = "https://know.dev/Place"

// Place is the abstract interface: Place
type Place interface {
	GetID() string
}

// PlaceRecord is the default implementation of Place.
type PlaceRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewPlaceRecord returns an empty record with the type IRI set.
func NewPlaceRecord(id string) *PlaceRecord {
	return &PlaceRecord{ID: id, Type: PlaceTypeIRI}
}

func (r *PlaceRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *PlaceRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// PlaceRecordFromJSON decodes a canonical JSON instance document.
func PlaceRecordFromJSON(text string) (*PlaceRecord, error) {
	var r PlaceRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != PlaceTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *PlaceRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, PlaceTypeIRI),
	}
	return finishTriples(lines)
}
