// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// HotelTypeIRI identifies the Hotel class.
const HotelTypeIRI = "https://know.dev/Hotel"

// Hotel is the abstract interface: Hotel
type Hotel interface {
	GetID() string
}

// HotelRecord is the default implementation of Hotel.
type HotelRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewHotelRecord returns an empty record with the type IRI set.
func NewHotelRecord(id string) *HotelRecord {
	return &HotelRecord{ID: id, Type: HotelTypeIRI}
}

func (r *HotelRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *HotelRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// HotelRecordFromJSON decodes a canonical JSON instance document.
func HotelRecordFromJSON(text string) (*HotelRecord, error) {
	var r HotelRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != HotelTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *HotelRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, HotelTypeIRI),
	}
	return finishTriples(lines)
}
