# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from ._base import Entity, FieldDef


class Person(Entity):
    """A person, real or fictional."""

    TYPE_IRI = "https://know.dev/Person"
    FIELDS = (
        FieldDef('age', 'age', 'https://know.dev/age', 'integer', False),
        FieldDef('aunt', 'aunt', 'https://know.dev/aunt', 'ref', True),
        FieldDef('brother', 'brother', 'https://know.dev/brother', 'ref', True),
        FieldDef('child', 'child', 'https://know.dev/child', 'ref', True),
        FieldDef('father', 'father', 'https://know.dev/father', 'ref', False),
        FieldDef('mother', 'mother', 'https://know.dev/mother', 'ref', False),
        FieldDef('name', 'name', 'https://know.dev/name', 'text', False),
        FieldDef('nephew', 'nephew', 'https://know.dev/nephew', 'ref', True),
        FieldDef('niece', 'niece', 'https://know.dev/niece', 'ref', True),
        FieldDef('parent', 'parent', 'https://know.dev/parent', 'ref', True),
        FieldDef('sibling', 'sibling', 'https://know.dev/sibling', 'ref', True),
        FieldDef('sister', 'sister', 'https://know.dev/sister', 'ref', True),
        FieldDef('uncle', 'uncle', 'https://know.dev/uncle', 'ref', True),
    )
