# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from ._base import Entity


class Organization(Entity):
    """Organization"""

    TYPE_IRI = "https://know.dev/Organization"
    FIELDS = ()
