// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// LandmarkTypeIRI identifies the Landmark class.
const LandmarkTypeIRI = "https://know.dev/Landmark"

// Landmark is the abstract interface: Landmark
type Landmark interface {
	GetID() string
}

// LandmarkRecord is the default implementation of Landmark.
type LandmarkRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewLandmarkRecord returns an empty record with the type IRI set.
func NewLandmarkRecord(id string) *LandmarkRecord {
	return &LandmarkRecord{ID: id, Type: LandmarkTypeIRI}
}

func (r *LandmarkRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *LandmarkRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// LandmarkRecordFromJSON decodes a canonical JSON instance document.
func LandmarkRecordFromJSON(text string) (*LandmarkRecord, error) {
	var r LandmarkRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != LandmarkTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *LandmarkRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, LandmarkTypeIRI),
	}
	return finishTriples(lines)
}
