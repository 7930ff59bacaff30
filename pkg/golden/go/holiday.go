// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// HolidayTypeIRI identifies the Holiday class.
const HolidayTypeIRI = "https://know.dev/Holiday"

// Holiday is the abstract interface: Holiday
type Holiday interface {
	GetID() string
}

// HolidayRecord is the default implementation of Holiday.
type HolidayRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewHolidayRecord returns an empty record with the type IRI set.
func NewHolidayRecord(id string) *HolidayRecord {
	return &HolidayRecord{ID: id, Type: HolidayTypeIRI}
}

func (r *HolidayRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *HolidayRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// HolidayRecordFromJSON decodes a canonical JSON instance document.
func HolidayRecordFromJSON(text string) (*HolidayRecord, error) {
	var r HolidayRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != HolidayTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *HolidayRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, HolidayTypeIRI),
	}
	return finishTriples(lines)
}
