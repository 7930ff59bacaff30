# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .place import Place


class Landmark(Place):
    """Landmark"""

    TYPE_IRI = "https://know.dev/Landmark"
