# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .place import Place


class Hotel(Place):
    """Hotel"""

    TYPE_IRI = "https://know.dev/Hotel"
