import threading
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from crosscap.chart import CurveChart
from crosscap.config import EVALUATOR_CACHE_SIZE
from crosscap.errors import CrosscapError, UnresolvedSymbolError
from crosscap.gf2 import Gf2Matrix, mat_inverse, preserves_form, transvection
from crosscap.perms import Permutation
from crosscap.validation import delta_consistent
from crosscap.words import GeneratorSymbol, MappingWord, SymbolKind, derived_definitions


@dataclass(frozen=True)
class RepImage:
    """The image of a mapping class: homology matrix and puncture permutation."""

    homology: Gf2Matrix
    punctures: Permutation

    @classmethod
    def identity(cls, dim: int, n: int) -> "RepImage":
        return cls(Gf2Matrix.identity(dim), Permutation.identity(n))

    def __mul__(self, other: "RepImage") -> "RepImage":
        return RepImage(self.homology @ other.homology, self.punctures * other.punctures)

    def inverse(self) -> "RepImage":
        return RepImage(mat_inverse(self.homology), self.punctures.inverse())

    def is_identity(self) -> bool:
        return self.homology.is_identity() and self.punctures.is_identity()


@dataclass(frozen=True)
class IdentityVerdict:
    """Per-representation outcome of comparing two words.

    ``punctures`` is None when there are fewer than two punctures.
    """

    homology: bool
    punctures: Optional[bool]
    definitional: bool = False

    @property
    def holds(self) -> bool:
        return self.homology and self.punctures is not False


class Evaluator:
    """Evaluates words against one chart, memoizing per word."""

    def __init__(self, chart: CurveChart):
        self.chart = chart
        self.params = chart.params
        self._definitions = derived_definitions(chart.params)
        self._memo: Dict[MappingWord, RepImage] = {}
        self._symbols: Dict[Tuple[GeneratorSymbol, int], RepImage] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def identity(self) -> RepImage:
        return RepImage.identity(self.params.dim, self.params.n)

    def symbol_image(self, symbol: GeneratorSymbol, exponent: int = 1) -> RepImage:
        key = (symbol, exponent)
        with self._lock:
            cached = self._symbols.get(key)
        if cached is not None:
            return cached
        image = self._resolve(symbol)
        if exponent == -1:
            image = image.inverse()
        with self._lock:
            self._symbols[key] = image
        return image

    def _resolve(self, symbol: GeneratorSymbol) -> RepImage:
        chart, n = self.chart, self.params.n
        trivial = Permutation.identity(n)
        try:
            if symbol.kind is SymbolKind.TWIST:
                return RepImage(transvection(chart.form, chart.class_of(symbol.label)), trivial)
            if symbol.kind is SymbolKind.INVOLUTION:
                if symbol.label in chart.involution_homology:
                    return RepImage(chart.involution_homology[symbol.label], chart.involution_puncture[symbol.label])
                if symbol.label in self._definitions:
                    return self.eval(self._definitions[symbol.label])
                raise UnresolvedSymbolError(f"involution {symbol.label} is not defined for this chart")
            key = symbol.nontwist_key
            if key not in chart.nontwist_homology:
                raise UnresolvedSymbolError(f"{symbol} has no homology image in this chart")
            return RepImage(chart.nontwist_homology[key], trivial)
        except UnresolvedSymbolError:
            raise
        except CrosscapError as e:
            raise UnresolvedSymbolError(f"{symbol}: {e}") from e

    def eval(self, word: MappingWord) -> RepImage:
        with self._lock:
            cached = self._memo.get(word)
            if cached is not None:
                self.hits += 1
                return cached
            self.misses += 1
        image = self.identity()
        for symbol, exponent in word:
            image = image * self.symbol_image(symbol, exponent)
        with self._lock:
            self._memo[word] = image
        return image

    def check_identity(self, lhs: MappingWord, rhs: MappingWord, definitional: bool = False) -> IdentityVerdict:
        left, right = self.eval(lhs), self.eval(rhs)
        punctures = left.punctures == right.punctures if self.params.n >= 2 else None
        return IdentityVerdict(left.homology == right.homology, punctures, definitional)

    def is_structural(self, image: RepImage) -> bool:
        """Form preservation and delta-consistency of an image."""
        return preserves_form(image.homology, self.chart.form) and delta_consistent(
            image.homology, image.punctures, self.params
        )


_EVALUATORS: Dict[str, Evaluator] = {}
_REGISTRY_LOCK = threading.Lock()


def evaluator_for(chart: CurveChart) -> Evaluator:
    """The shared evaluator of a chart, keyed by chart id.

    The registry keeps the EVALUATOR_CACHE_SIZE most recently used charts.
    """
    with _REGISTRY_LOCK:
        evaluator = _EVALUATORS.pop(chart.chart_id, None) or Evaluator(chart)
        _EVALUATORS[chart.chart_id] = evaluator
        while len(_EVALUATORS) > EVALUATOR_CACHE_SIZE:
            del _EVALUATORS[next(iter(_EVALUATORS))]
        return evaluator


def eval_word(w: MappingWord, chart: CurveChart) -> RepImage:
    return evaluator_for(chart).eval(w)


def check_identity(lhs: MappingWord, rhs: MappingWord, chart: CurveChart, definitional: bool = False) -> IdentityVerdict:
    return evaluator_for(chart).check_identity(lhs, rhs, definitional)
