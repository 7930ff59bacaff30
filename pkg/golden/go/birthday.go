// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// BirthdayTypeIRI identifies the Birthday class.
const BirthdayTypeIRI = "https://know.dev/Birthday"

// Birthday is the abstract interface: Birthday
type Birthday interface {
	GetID() string
}

// BirthdayRecord is the default implementation of Birthday.
type BirthdayRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewBirthdayRecord returns an empty record with the type IRI set.
func NewBirthdayRecord(id string) *BirthdayRecord {
	return &BirthdayRecord{ID: id, Type: BirthdayTypeIRI}
}

func (r *BirthdayRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *BirthdayRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// BirthdayRecordFromJSON decodes a canonical JSON instance document.
func BirthdayRecordFromJSON(text string) (*BirthdayRecord, error) {
	var r BirthdayRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != BirthdayTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *BirthdayRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, BirthdayTypeIRI),
	}
	return finishTriples(lines)
}
