"""Identifier word splitting and rendering under target naming conventions."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

_WORD_RE = re.compile(r"[a-z][a-z0-9]*")
# Splits a camel/pascal segment: a run of capitals keeps together unless its
# last capital starts a lowercase word (IRIValue -> IRI + Value).
_SEGMENT_RE = re.compile(r"[A-Z]+(?![a-z])|[A-Z][a-z0-9]*|[a-z][a-z0-9]*")


class InvalidIdentifierError(ValueError):
    pass


@dataclass(frozen=True)
class WordSequence:
    words: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.words:
            raise InvalidIdentifierError("empty word sequence")
        for w in self.words:
            if not _WORD_RE.fullmatch(w):
                raise InvalidIdentifierError(f"bad word {w!r}")


class NamingConvention(Enum):
    LOWER_SNAKE = "lower_snake"
    CAMEL = "camel"
    PASCAL = "pascal"
    KEBAB = "kebab"


def split_words(local_name: str) -> WordSequence:
    """Split an identifier into lowercase words.

    Boundaries: underscores, hyphens, lower-to-upper transitions, and the
    last capital of an all-caps run when followed by lowercase. Digits stay
    attached to the preceding word.
    """
    if not local_name:
        raise InvalidIdentifierError("empty identifier")
    words: list[str] = []
    for segment in re.split(r"[_\-]+", local_name):
        if not segment:
            continue
        parts = _SEGMENT_RE.findall(segment)
        if "".join(parts) != segment:
            raise InvalidIdentifierError(f"illegal characters in {local_name!r}")
        words.extend(p.lower() for p in parts)
    return WordSequence(tuple(words))


def apply_convention(words: WordSequence, convention: NamingConvention) -> str:
    if convention is NamingConvention.LOWER_SNAKE:
        return "_".join(words.words)
    if convention is NamingConvention.KEBAB:
        return "-".join(words.words)
    pascal = "".join(w[0].upper() + w[1:] for w in words.words)
    if convention is NamingConvention.PASCAL:
        return pascal
    return pascal[0].lower() + pascal[1:]
