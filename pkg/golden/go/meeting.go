// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// MeetingTypeIRI identifies the Meeting class.
const MeetingTypeIRI = "https://know.dev/Meeting"

// Meeting is the abstract interface: Meeting
type Meeting interface {
	GetID() string
}

// MeetingRecord is the default implementation of Meeting.
type MeetingRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewMeetingRecord returns an empty record with the type IRI set.
func NewMeetingRecord(id string) *MeetingRecord {
	return &MeetingRecord{ID: id, Type: MeetingTypeIRI}
}

func (r *MeetingRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *MeetingRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// MeetingRecordFromJSON decodes a canonical JSON instance document.
func MeetingRecordFromJSON(text string) (*MeetingRecord, error) {
	var r MeetingRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != MeetingTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *MeetingRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, MeetingTypeIRI),
	}
	return finishTriples(lines)
}
