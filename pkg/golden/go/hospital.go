// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// HospitalTypeIRI identifies the Hospital class.
const HospitalTypeIRI = "https://know.dev/Hospital"

// Hospital is the abstract interface: Hospital
type Hospital interface {
	GetID() string
}

// HospitalRecord is the default implementation of Hospital.
type HospitalRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewHospitalRecord returns an empty record with the type IRI set.
func NewHospitalRecord(id string) *HospitalRecord {
	return &HospitalRecord{ID: id, Type: HospitalTypeIRI}
}

func (r *HospitalRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *HospitalRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// HospitalRecordFromJSON decodes a canonical JSON instance document.
func HospitalRecordFromJSON(text string) (*HospitalRecord, error) {
	var r HospitalRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != HospitalTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *HospitalRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, HospitalTypeIRI),
	}
	return finishTriples(lines)
}
