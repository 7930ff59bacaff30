// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

// TypeNames lists all generated types, sorted.
var TypeNames = []string{
	"Airport",
	"Appointment",
	"Birthday",
	"Cafe",
	"Event",
	"Group",
	"Holiday",
	"Hospital",
	"Hotel",
	"Landmark",
	"Meeting",
	"Organization",
	"Party",
	"Person",
	"Place",
	"PlaceOfWorship",
	"Restaurant",
}
