// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// EventTypeIRI identifies the Event class.
const EventTypeIRI = "https://know.dev/Event"

// Event is the abstract interface: Event
type Event interface {
	GetID() string
}

// EventRecord is the default implementation of Event.
type EventRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewEventRecord returns an empty record with the type IRI set.
func NewEventRecord(id string) *EventRecord {
	return &EventRecord{ID: id, Type: EventTypeIRI}
}

func (r *EventRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *EventRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// EventRecordFromJSON decodes a canonical JSON instance document.
func EventRecordFromJSON(text string) (*EventRecord, error) {
	var r EventRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != EventTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *EventRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, EventTypeIRI),
	}
	return finishTriples(lines)
}
