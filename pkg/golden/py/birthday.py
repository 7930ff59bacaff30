# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .event import Event


class Birthday(Event):
    """Birthday"""

    TYPE_IRI = "https://know.dev/Birthday"
