# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .place import Place


class Cafe(Place):
    """Cafe"""

    TYPE_IRI = "https://know.dev/Cafe"
