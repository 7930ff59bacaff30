// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// RestaurantTypeIRI identifies the Restaurant class.
const RestaurantTypeIRI = "https://know.dev/Restaurant"

// Restaurant is the abstract interface: Restaurant
type Restaurant interface {
	GetID() string
}

// RestaurantRecord is the default implementation of Restaurant.
type RestaurantRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
}

// NewRestaurantRecord returns an empty record with the type IRI set.
func NewRestaurantRecord(id string) *RestaurantRecord {
	return &RestaurantRecord{ID: id, Type: RestaurantTypeIRI}
}

func (r *RestaurantRecord) GetID() string {
	return r.ID
}

// ToJSONText renders the canonical JSON instance document.
func (r *RestaurantRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// RestaurantRecordFromJSON decodes a canonical JSON instance document.
func RestaurantRecordFromJSON(text string) (*RestaurantRecord, error) {
	var r RestaurantRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != RestaurantTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *RestaurantRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, RestaurantTypeIRI),
	}
	return finishTriples(lines)
}
