import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Tuple

from crosscap.chart import chart_involutions
from crosscap.surface import CurveId, SurfaceParams

DERIVED_INVOLUTIONS = ("rho1", "rho2", "rho3")
EVEN_DERIVED_INVOLUTIONS = ("rho4", "rho5")

SYMBOL_RE = re.compile(r"^(?:t\[(?P<curve>\w+)\]|(?P<slide>[vw])\[(?P<index>\d+)\]|(?P<y>y)|(?P<involution>sigma|tau|I|J|K|W|rho[1-5]))$")


class SymbolKind(str, Enum):
    TWIST = "twist"
    CROSSCAP_SLIDE = "crosscap_slide"
    SLIDE_V = "puncture_slide_v"
    SLIDE_W = "puncture_slide_w"
    INVOLUTION = "involution"


@dataclass(frozen=True, order=True)
class GeneratorSymbol:
    """A letter: a twist t[c], the crosscap slide y, a puncture slide v[i]/w[i] or an involution."""

    kind: SymbolKind
    label: str = ""
    index: int = 0

    @classmethod
    def twist(cls, curve: str) -> "GeneratorSymbol":
        CurveId.parse(curve)
        return cls(SymbolKind.TWIST, label=curve)

    @classmethod
    def crosscap_slide(cls) -> "GeneratorSymbol":
        return cls(SymbolKind.CROSSCAP_SLIDE)

    @classmethod
    def slide_v(cls, index: int) -> "GeneratorSymbol":
        return cls(SymbolKind.SLIDE_V, index=index)

    @classmethod
    def slide_w(cls, index: int) -> "GeneratorSymbol":
        return cls(SymbolKind.SLIDE_W, index=index)

    @classmethod
    def involution(cls, name: str) -> "GeneratorSymbol":
        return cls(SymbolKind.INVOLUTION, label=name)

    @classmethod
    def parse(cls, text: str) -> "GeneratorSymbol":
        match = SYMBOL_RE.match(text.strip())
        if not match:
            raise ValueError(f"unknown generator symbol {text!r}")
        if match.group("curve"):
            return cls.twist(match.group("curve"))
        if match.group("slide"):
            index = int(match.group("index"))
            return cls.slide_v(index) if match.group("slide") == "v" else cls.slide_w(index)
        if match.group("y"):
            return cls.crosscap_slide()
        return cls.involution(match.group("involution"))

    @property
    def is_involution(self) -> bool:
        return self.kind is SymbolKind.INVOLUTION

    @property
    def nontwist_key(self) -> str:
        """Key of the symbol in a chart's non-twist table: y, v3, w1."""
        if self.kind is SymbolKind.CROSSCAP_SLIDE:
            return "y"
        prefix = "v" if self.kind is SymbolKind.SLIDE_V else "w"
        return f"{prefix}{self.index}"

    def __str__(self) -> str:
        if self.kind is SymbolKind.TWIST:
            return f"t[{self.label}]"
        if self.kind is SymbolKind.CROSSCAP_SLIDE:
            return "y"
        if self.kind is SymbolKind.INVOLUTION:
            return self.label
        return f"{'v' if self.kind is SymbolKind.SLIDE_V else 'w'}[{self.index}]"


Letter = Tuple[GeneratorSymbol, int]


@dataclass(frozen=True)
class MappingWord:
    """A product of letters, read left to right as a product of mapping classes.

    The rightmost letter acts first.
    """

    letters: Tuple[Letter, ...] = ()

    @classmethod
    def of(cls, *items) -> "MappingWord":
        """Builds a word from symbols, ``(symbol, exponent)`` pairs or other words."""
        letters: List[Letter] = []
        for item in items:
            if isinstance(item, MappingWord):
                letters.extend(item.letters)
            elif isinstance(item, GeneratorSymbol):
                letters.append((item, 1))
            else:
                symbol, exponent = item
                if exponent not in (1, -1):
                    raise ValueError(f"exponent must be +1 or -1, got {exponent}")
                letters.append((symbol, exponent))
        return cls(tuple(letters))

    @classmethod
    def parse(cls, tokens: Iterable[str]) -> "MappingWord":
        letters = []
        for token in tokens:
            text, _, power = token.partition("^")
            letters.append((GeneratorSymbol.parse(text), -1 if power.strip() == "-1" else 1))
        return cls(tuple(letters))

    def inverse(self) -> "MappingWord":
        return MappingWord(tuple((symbol, -exponent) for symbol, exponent in reversed(self.letters)))

    def symbols(self) -> List[GeneratorSymbol]:
        return [symbol for symbol, _ in self.letters]

    def tokens(self) -> List[str]:
        return [str(symbol) if exponent == 1 or symbol.is_involution else f"{symbol}^-1" for symbol, exponent in self.letters]

    def __mul__(self, other: "MappingWord") -> "MappingWord":
        return MappingWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(self.tokens()) or "1"


def free_reduce(w: MappingWord) -> MappingWord:
    """Cancels adjacent inverse pairs; involution letters are their own inverses."""
    stack: List[Letter] = []
    for symbol, exponent in w.letters:
        if symbol.is_involution:
            exponent = 1
        if stack and stack[-1][0] == symbol and stack[-1][1] == (exponent if symbol.is_involution else -exponent):
            stack.pop()
        else:
            stack.append((symbol, exponent))
    return MappingWord(tuple(stack))


def conjugate(f: MappingWord, w: MappingWord) -> MappingWord:
    """free_reduce(f w f^-1)."""
    return free_reduce(f * w * f.inverse())


def involution_word(*names: str) -> MappingWord:
    return MappingWord.of(*(GeneratorSymbol.involution(name) for name in names))


def alphabet(p: SurfaceParams) -> Tuple[str, ...]:
    """The generating involutions: 8 in odd mode, 11 in even mode."""
    return chart_involutions(p) + DERIVED_INVOLUTIONS + (EVEN_DERIVED_INVOLUTIONS if p.is_even else ())


def derived_definitions(p: SurfaceParams) -> Dict[str, MappingWord]:
    """The products of a chart involution and a generator that are themselves involutions."""
    involution = GeneratorSymbol.involution
    definitions = {
        "rho1": MappingWord.of(involution("tau"), GeneratorSymbol.twist("a1")),
        "rho2": MappingWord.of(involution("K" if p.is_even else "tau"), GeneratorSymbol.slide_v(1)),
        "rho3": MappingWord.of(involution("W"), GeneratorSymbol.crosscap_slide()),
    }
    if p.is_even:
        definitions["rho4"] = MappingWord.of(involution("J"), GeneratorSymbol.twist(f"b{p.r + 1}"))
        definitions["rho5"] = MappingWord.of(involution("J"), GeneratorSymbol.twist(f"c{p.r}"))
    return definitions
