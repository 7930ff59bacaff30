# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .event import Event


class Meeting(Event):
    """Meeting"""

    TYPE_IRI = "https://know.dev/Meeting"
