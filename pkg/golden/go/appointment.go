// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// AppointmentTypeIRI identifies the Appointment class.
const AppointmentTypeIRI = "https://know.dev/Appointment"

// Appointment is the abstract interface: Appointment
type Appointment interface {
	GetID() string
}

// AppointmentRecord is the default implementation of Appointment.
type AppointmentRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewAppointmentRecord returns an empty record with the type IRI set.
func NewAppointmentRecord(id string) *AppointmentRecord {
	return &AppointmentRecord{ID: id, Type: AppointmentTypeIRI}
}

func (r *AppointmentRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *AppointmentRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// AppointmentRecordFromJSON decodes a canonical JSON instance document.
func AppointmentRecordFromJSON(text string) (*AppointmentRecord, error) {
	var r AppointmentRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != AppointmentTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *AppointmentRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, AppointmentTypeIRI),
	}
	return finishTriples(lines)
}
