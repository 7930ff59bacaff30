# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from ._base import Entity


class Group(Entity):
    """A group of people."""

    TYPE_IRI = "https://know.dev/Group"
    FIELDS = ()
