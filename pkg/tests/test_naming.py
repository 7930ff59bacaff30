import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knowforge.naming import (
    InvalidIdentifierError,
    NamingConvention,
    WordSequence,
    apply_convention,
    split_words,
)


@pytest.mark.parametrize(
    "name,words",
    [
        ("age", ("age",)),
        ("PlaceOfWorship", ("place", "of", "worship")),
        ("IRIValue", ("iri", "value")),
        ("address2", ("address2",)),
        ("snake_case_name", ("snake", "case", "name")),
        ("kebab-case-name", ("kebab", "case", "name")),
        ("camelCaseName", ("camel", "case", "name")),
        ("HTTPServer", ("http", "server")),
    ],
)
def test_split_words(name, words):
    assert split_words(name).words == words


@pytest.mark.parametrize("bad", ["", "___", "has space", "naïve", "über"])
def test_split_words_rejects(bad):
    with pytest.raises(InvalidIdentifierError):
        split_words(bad)


@pytest.mark.parametrize(
    "convention,expected",
    [
        (NamingConvention.LOWER_SNAKE, "place_of_worship"),
        (NamingConvention.KEBAB, "place-of-worship"),
        (NamingConvention.PASCAL, "PlaceOfWorship"),
        (NamingConvention.CAMEL, "placeOfWorship"),
    ],
)
def test_apply_convention(convention, expected):
    ws = WordSequence(("place", "of", "worship"))
    assert apply_convention(ws, convention) == expected


def test_single_word_camel_fixed_point():
    assert apply_convention(WordSequence(("age",)), NamingConvention.CAMEL) == "age"


_ANY_WORD = st.from_regex(r"[a-z][a-z0-9]{0,7}", fullmatch=True)
# Camel/pascal renderings are only invertible when no word is a bare letter
# (two adjacent one-letter words merge into an all-caps run) and no digit
# immediately follows a one-letter word.
_CAMEL_SAFE_WORD = st.from_regex(r"[a-z]{2}[a-z0-9]{0,6}", fullmatch=True)

_ANY_SEQ = st.lists(_ANY_WORD, min_size=1, max_size=5).map(
    lambda ws: WordSequence(tuple(ws))
)
_CAMEL_SAFE_SEQ = st.lists(_CAMEL_SAFE_WORD, min_size=1, max_size=5).map(
    lambda ws: WordSequence(tuple(ws))
)


@settings(max_examples=500, deadline=None)
@given(_ANY_SEQ, st.sampled_from([NamingConvention.LOWER_SNAKE, NamingConvention.KEBAB]))
def test_split_render_identity_separator_conventions(ws, convention):
    assert split_words(apply_convention(ws, convention)) == ws


@settings(max_examples=500, deadline=None)
@given(_CAMEL_SAFE_SEQ, st.sampled_from([NamingConvention.CAMEL, NamingConvention.PASCAL]))
def test_split_render_identity_case_conventions(ws, convention):
    assert split_words(apply_convention(ws, convention)) == ws


@settings(max_examples=300, deadline=None)
@given(_CAMEL_SAFE_SEQ)
def test_pascal_camel_agree_after_first_word(ws):
    pascal = apply_convention(ws, NamingConvention.PASCAL)
    camel = apply_convention(ws, NamingConvention.CAMEL)
    assert camel[0] == pascal[0].lower()
    assert camel[1:] == pascal[1:]
