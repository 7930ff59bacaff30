# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .event import Event


class Appointment(Event):
    """Appointment"""

    TYPE_IRI = "https://know.dev/Appointment"
