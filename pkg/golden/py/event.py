# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from ._base import Entity


class Event(Entity):
    """Event"""

    TYPE_IRI = "https://know.dev/Event"
    FIELDS = ()
