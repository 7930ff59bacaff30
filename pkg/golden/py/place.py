# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from ._base import Entity


class Place(Entity):
    """Place"""

    TYPE_IRI = "https://know.dev/Place"
    FIELDS = ()
