# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .event import Event


class Party(Event):
    """Party"""

    TYPE_IRI = "https://know.dev/Party"
