// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// GroupTypeIRI identifies the Group class.
const GroupTypeIRI = "https://know.dev/Group"

// Group is the abstract interface: A group of people.
type Group interface {
	GetID() string
}

// GroupRecord is the default implementation of Group.
type GroupRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewGroupRecord returns an empty record with the type IRI set.
func NewGroupRecord(id string) *GroupRecord {
	return &GroupRecord{ID: id, Type: GroupTypeIRI}
}

func (r *GroupRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *GroupRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// GroupRecordFromJSON decodes a canonical JSON instance document.
func GroupRecordFromJSON(text string) (*GroupRecord, error) {
	var r GroupRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != GroupTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *GroupRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, GroupTypeIRI),
	}
	return finishTriples(lines)
}
