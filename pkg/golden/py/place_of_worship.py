# Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

from .place import Place


class PlaceOfWorship(Place):
    """Place of worship"""

    TYPE_IRI = "https://know.dev/PlaceOfWorship"
