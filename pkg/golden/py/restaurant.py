# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .place import Place


class Restaurant(Place):
    """Restaurant"""

    TYPE_IRI = "https://know.dev/Restaurant"
