// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"encoding/json"
	"fmt"
)

// PersonTypeIRI identifies the Person class.
const PersonTypeIRI = "https://know.dev/Person"

// Person is the abstract interface: A person, real or fictional.
type Person interface {
	GetID() string
	GetAge() *int64
	GetAunt() []string
	GetBrother() []string
	GetChild() []string
	GetFather() *string
	GetMother() *string
	GetName() *string
	GetNephew() []string
	GetNiece() []string
	GetParent() []string
	GetSibling() []string
	GetSister() []string
	GetUncle() []string
}

// PersonRecord is the default implementation of Person.
type PersonRecord struct {
	ID   string `json:"id"`
	Type string `json:"type"`
	Age *int64 `json:"age,omitempty"`
	Aunt []string `json:"aunt,omitempty"`
	Brother []string `json:"brother,omitempty"`
	Child []string `json:"child,omitempty"`
	Father *string `json:"father,omitempty"`
	Mother *string `json:"mother,omitempty"`
	Name *string `json:"name,omitempty"`
	Nephew []string `json:"nephew,omitempty"`
	Niece []string `json:"niece,omitempty"`
	Parent []string `json:"parent,omitempty"`
	Sibling []string `json:"sibling,omitempty"`
	Sister []string `json:"sister,omitempty"`
	Uncle []string `json:"uncle,omitempty"`
}

// NewPersonRecord returns an empty record with the type IRI set.
func NewPersonRecord(id string) *PersonRecord {
	return &PersonRecord{ID: id, Type: PersonTypeIRI}
}

func (r *PersonRecord) GetID() string {
	return r.ID
}

func (r *PersonRecord) GetAge() *int64 {
	return r.Age
}

func (r *PersonRecord) GetAunt() []string {
	return r.Aunt
}

func (r *PersonRecord) GetBrother() []string {
	return r.Brother
}

func (r *PersonRecord) GetChild() []string {
	return r.Child
}

func (r *PersonRecord) GetFather() *string {
	return r.Father
}

func (r *PersonRecord) GetMother() *string {
	return r.Mother
}

func (r *PersonRecord) GetName() *string {
	return r.Name
}

func (r *PersonRecord) GetNephew() []string {
	return r.Nephew
}

func (r *PersonRecord) GetNiece() []string {
	return r.Niece
}

func (r *PersonRecord) GetParent() []string {
	return r.Parent
}

func (r *PersonRecord) GetSibling() []string {
	return r.Sibling
}

func (r *PersonRecord) GetSister() []string {
	return r.Sister
}

func (r *PersonRecord) GetUncle() []string {
	return r.Uncle
}

// ToJSONText renders the canonical JSON instance document.
func (r *PersonRecord) ToJSONText() (string, error) {
	data, err := json.MarshalIndent(r, "", "  ")
	if err != nil {
		return "", err
	}
	return string(data) + "\n", nil
}

// PersonRecordFromJSON decodes a canonical JSON instance document.
func PersonRecordFromJSON(text string) (*PersonRecord, error) {
	var r PersonRecord
	if err := json.Unmarshal([]byte(text), &r); err != nil {
		return nil, err
	}
	if r.Type != PersonTypeIRI {
		return nil, fmt.Errorf("type mismatch: %s", r.Type)
	}
	return &r, nil
}

// ToNTriples renders the record as canonical N-Triples.
func (r *PersonRecord) ToNTriples() string {
	lines := []string{
		fmt.Sprintf("<%s> <%s> <%s> .", r.ID, RDFType, PersonTypeIRI),
	}
	if r.Age != nil {
		value := *r.Age
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/age", formatLiteral(fmt.Sprintf("%v", value), "integer")))
	}
	for _, value := range r.Aunt {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/aunt", formatRef(value)))
	}
	for _, value := range r.Brother {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/brother", formatRef(value)))
	}
	for _, value := range r.Child {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/child", formatRef(value)))
	}
	if r.Father != nil {
		value := *r.Father
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/father", formatRef(value)))
	}
	if r.Mother != nil {
		value := *r.Mother
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/mother", formatRef(value)))
	}
	if r.Name != nil {
		value := *r.Name
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/name", formatLiteral(value, "text")))
	}
	for _, value := range r.Nephew {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/nephew", formatRef(value)))
	}
	for _, value := range r.Niece {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/niece", formatRef(value)))
	}
	for _, value := range r.Parent {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/parent", formatRef(value)))
	}
	for _, value := range r.Sibling {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/sibling", formatRef(value)))
	}
	for _, value := range r.Sister {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/sister", formatRef(value)))
	}
	for _, value := range r.Uncle {
		lines = append(lines, fmt.Sprintf("<%s> <%s> %s .", r.ID, "https://know.dev/uncle", formatRef(value)))
	}
	return finishTriples(lines)
}
