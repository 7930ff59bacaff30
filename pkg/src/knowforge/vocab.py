"""Bundled KNOW vocabulary: everyday-life classes plus kinship properties.

The Turtle below is the reference input for the whole pipeline; the same
text is committed at ``vocab/know.ttl``. The ``name`` property is an
addition of this distribution (it makes instance round-trips readable)
and is marked as such in its comment.
"""

from __future__ import annotations

from .model import OntologyModel, build_model
from .rdf import Iri, parse_turtle

KNOW_BASE = Iri("https://know.dev/")

_SOURCE = """\
@base <https://know.dev/> .
@prefix know: <https://know.dev/> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix schema: <https://schema.org/> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .

# -- Top-level classes: social (Person, Group, Organization) and
# -- spacetime (Place, Event).

know:Person a owl:Class ;
    rdfs:label "Person"@en ;
    rdfs:comment "A person, real or fictional."@en ;
    owl:equivalentClass schema:Person .

know:Group a owl:Class ;
    rdfs:label "Group"@en ;
    rdfs:comment "A group of people."@en .

know:Organization a owl:Class ;
    rdfs:label "Organization"@en ;
    owl:equivalentClass schema:Organization .

know:Place a owl:Class ;
    rdfs:label "Place"@en ;
    owl:equivalentClass schema:Place .

know:Event a owl:Class ;
    rdfs:label "Event"@en ;
    owl:equivalentClass schema:Event .

# -- Places.

know:Landmark a owl:Class ;
    rdfs:label "Landmark"@en ;
    rdfs:subClassOf know:Place .

know:PlaceOfWorship a owl:Class ;
    rdfs:label "Place of worship"@en ;
    rdfs:subClassOf know:Place .

know:Airport a owl:Class ;
    rdfs:label "Airport"@en ;
    rdfs:subClassOf know:Place .

know:Cafe a owl:Class ;
    rdfs:label "Cafe"@en ;
    rdfs:subClassOf know:Place .

know:Hospital a owl:Class ;
    rdfs:label "Hospital"@en ;
    rdfs:subClassOf know:Place .

know:Hotel a owl:Class ;
    rdfs:label "Hotel"@en ;
    rdfs:subClassOf know:Place .

know:Restaurant a owl:Class ;
    rdfs:label "Restaurant"@en ;
    rdfs:subClassOf know:Place .

# -- Events.

know:Birthday a owl:Class ;
    rdfs:label "Birthday"@en ;
    rdfs:subClassOf know:Event .

know:Appointment a owl:Class ;
    rdfs:label "Appointment"@en ;
    rdfs:subClassOf know:Event .

know:Holiday a owl:Class ;
    rdfs:label "Holiday"@en ;
    rdfs:subClassOf know:Event .

know:Meeting a owl:Class ;
    rdfs:label "Meeting"@en ;
    rdfs:subClassOf know:Event .

know:Party a owl:Class ;
    rdfs:label "Party"@en ;
    rdfs:subClassOf know:Event .

# -- Person properties. The age range is deliberately unconstrained so
# -- that fictional characters of any age can be modeled.

know:age a owl:DatatypeProperty , owl:FunctionalProperty ;
    rdfs:label "age"@en ;
    rdfs:domain know:Person ;
    rdfs:range xsd:integer .

know:name a owl:DatatypeProperty , owl:FunctionalProperty ;
    rdfs:label "name"@en ;
    rdfs:comment "Display name. A convenience addition of this distribution."@en ;
    rdfs:domain know:Person ;
    rdfs:range xsd:string .

# -- Kinship. Father/mother are functional and specialize parent;
# -- brother/sister specialize sibling; all others are multi-valued.

know:parent a owl:ObjectProperty ;
    rdfs:label "parent"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person ;
    owl:inverseOf know:child ;
    owl:equivalentProperty schema:parent .

know:child a owl:ObjectProperty ;
    rdfs:label "child"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person ;
    owl:inverseOf know:parent ;
    owl:equivalentProperty schema:children .

know:father a owl:ObjectProperty , owl:FunctionalProperty ;
    rdfs:label "father"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person ;
    rdfs:subPropertyOf know:parent .

know:mother a owl:ObjectProperty , owl:FunctionalProperty ;
    rdfs:label "mother"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person ;
    rdfs:subPropertyOf know:parent .

know:sibling a owl:ObjectProperty ;
    rdfs:label "sibling"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person ;
    owl:equivalentProperty schema:sibling .

know:brother a owl:ObjectProperty ;
    rdfs:label "brother"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person ;
    rdfs:subPropertyOf know:sibling .

know:sister a owl:ObjectProperty ;
    rdfs:label "sister"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person ;
    rdfs:subPropertyOf know:sibling .

know:uncle a owl:ObjectProperty ;
    rdfs:label "uncle"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person .

know:aunt a owl:ObjectProperty ;
    rdfs:label "aunt"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person .

know:nephew a owl:ObjectProperty ;
    rdfs:label "nephew"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person .

know:niece a owl:ObjectProperty ;
    rdfs:label "niece"@en ;
    rdfs:domain know:Person ;
    rdfs:range know:Person .
"""


def bundled_source() -> str:
    """The embedded Turtle text of the bundled vocabulary."""
    return _SOURCE


def bundled_model() -> OntologyModel:
    """Parse and build the bundled vocabulary in one step."""
    return build_model(parse_turtle(bundled_source()), KNOW_BASE)
