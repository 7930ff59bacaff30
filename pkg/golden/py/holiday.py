# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .event import Event


class Holiday(Event):
    """Holiday"""

    TYPE_IRI = "https://know.dev/Holiday"
