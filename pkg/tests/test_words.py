import pytest

from crosscap.surface import build_params
from crosscap.words import (
    GeneratorSymbol,
    MappingWord,
    alphabet,
    conjugate,
    derived_definitions,
    free_reduce,
    involution_word,
)


def test_symbols_print_and_parse():
    """Each symbol kind prints in its short form and parses back."""
    for text in ["t[a3]", "y", "v[2]", "w[1]", "sigma", "rho5", "K"]:
        assert str(GeneratorSymbol.parse(text)) == text


def test_parse_rejects_unknown_symbol():
    """An unknown name raises ValueError."""
    with pytest.raises(ValueError):
        GeneratorSymbol.parse("rho6")


def test_word_parse_reads_inverse_suffix():
    """Tokens ending in ^-1 become inverse letters."""
    word = MappingWord.parse(["t[a3]^-1", "y"])
    assert word.letters == ((GeneratorSymbol.twist("a3"), -1), (GeneratorSymbol.crosscap_slide(), 1))
    assert word.tokens() == ["t[a3]^-1", "y"]


def test_inverse_reverses_letters():
    """The inverse reverses order and flips exponents."""
    word = MappingWord.of(GeneratorSymbol.twist("a1"), GeneratorSymbol.slide_v(2))
    assert str(word.inverse()) == "v[2]^-1 t[a1]^-1"


def test_free_reduce_cancels_involutions():
    """Adjacent equal involutions cancel, as do twist/inverse pairs."""
    word = MappingWord.of(
        GeneratorSymbol.involution("tau"),
        GeneratorSymbol.involution("tau"),
        GeneratorSymbol.twist("a1"),
        (GeneratorSymbol.twist("a1"), -1),
        GeneratorSymbol.involution("W"),
    )
    assert str(free_reduce(word)) == "W"


def test_conjugate_reduces():
    """Conjugating sigma tau by tau sigma collapses to sigma tau."""
    assert str(conjugate(involution_word("tau", "sigma"), involution_word("sigma", "tau"))) == "sigma tau"


def test_alphabet_sizes():
    """Odd mode has 8 involutions and even mode 11."""
    assert alphabet(build_params(13, 5)) == ("sigma", "tau", "I", "J", "W", "rho1", "rho2", "rho3")
    assert len(alphabet(build_params(16, 4))) == 11


def test_derived_definitions_even():
    """Even mode defines rho2 with K and adds rho4, rho5."""
    definitions = derived_definitions(build_params(16, 4))
    assert str(definitions["rho2"]) == "K v[1]"
    assert str(definitions["rho4"]) == "J t[b8]"
    assert str(definitions["rho5"]) == "J t[c7]"
