// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

package know

import (
	"fmt"
	"sort"
	"strings"
)

// RDFType is the rdf:type predicate IRI.
const RDFType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

var datatypes = map[string]string{
	"text":     "http://www.w3.org/2001/XMLSchema#string",
	"integer":  "http://www.w3.org/2001/XMLSchema#integer",
	"decimal":  "http://www.w3.org/2001/XMLSchema#decimal",
	"boolean":  "http://www.w3.org/2001/XMLSchema#boolean",
	"date":     "http://www.w3.org/2001/XMLSchema#date",
	"datetime": "http://www.w3.org/2001/XMLSchema#dateTime",
	"iri":      "http://www.w3.org/2001/XMLSchema#anyURI",
}

func escapeLiteral(value string) string {
	var b strings.Builder
	for _, ch := range value {
		switch {
		case ch == '\\':
			b.WriteString(`\\`)
		case ch == '"':
			b.WriteString(`\"`)
		case ch == '\n':
			b.WriteString(`\n`)
		case ch == '\r':
			b.WriteString(`\r`)
		case ch == '\t':
			b.WriteString(`\t`)
		case ch < 0x20:
			b.WriteString(fmt.Sprintf(`\u%04X`, ch))
		default:
			b.WriteRune(ch)
		}
	}
	return b.String()
}

func formatRef(iri string) string {
	return "<" + iri + ">"
}

func formatLiteral(lexical, kind string) string {
	quoted := `"` + escapeLiteral(lexical) + `"`
	if kind == "text" {
		return quoted
	}
	return quoted + "^^<" + datatypes[kind] + ">"
}

func finishTriples(lines []string) string {
	sort.Strings(lines)
	var b strings.Builder
	prev := ""
	for i, line := range lines {
		if i > 0 && line == prev {
			continue
		}
		b.WriteString(line)
		b.WriteString("\n")
		prev = line
	}
	return b.String()
}
