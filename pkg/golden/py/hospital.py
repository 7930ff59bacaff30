# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .place import Place


class Hospital(Place):
    """Hospital"""

    TYPE_IRI = "https://know.dev/Hospital"
