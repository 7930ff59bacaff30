# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .place import Place


class Airport(Place):
    """Airport"""

    TYPE_IRI = "https://know.dev/Airport"
