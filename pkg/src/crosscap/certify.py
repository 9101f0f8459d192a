"""Certificates: every Korkmaz generator written as a word in the involution alphabet.

Twists are seeded from the derived involutions or transported by conjugation,
t_{f(c)} = f t_c^eps f^-1, with eps read from the chart. The rule ids R1..R12
name the steps of the recursion:

    R1  t_{a_1} = tau rho_1                R7  d_1, d_2 from b_1, b_2 via I
    R2  a-transport by R = tau sigma       R8  e_1 from n_1 via J, then T = J I
    R3  c_{k+1} from a_{k+3} via I         R9  v_1 seed, then R (odd) or S (even)
    R4  c-transport in both directions     R10 w_n from v_1 via sigma, then sigma tau
    R5  b_k from c_k via I                 R11 y = W rho_3
    R6  b-transport in both directions     R12 t_{b_{r+1}} = J rho_4, t_{c_r} = J rho_5
"""

import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Set, Tuple

import srsly
from pydantic import BaseModel, Field, ValidationError

from crosscap.chart import CurveChart, default_chart
from crosscap.errors import CertificateFileError, CertificationError, NotRequiredGeneratorError, UnboundCurveError
from crosscap.surface import CurveId, SurfaceParams, build_params, lambda_prime
from crosscap.words import GeneratorSymbol, MappingWord, SymbolKind, alphabet, conjugate, involution_word

DEFINITIONAL_RULES = frozenset({"R1", "R9", "R11", "R12"})


@dataclass(frozen=True)
class TraceStep:
    rule: str
    note: str = ""
    reconstructed: bool = False


@dataclass(frozen=True)
class Certificate:
    """A word in involution symbols equal to ``target``, with the rules that produced it."""

    target: GeneratorSymbol
    word: MappingWord
    trace: Tuple[TraceStep, ...]

    @property
    def rules(self) -> List[str]:
        return [step.rule for step in self.trace]

    @property
    def definitional(self) -> bool:
        """True when the word is a single seed expansion, equal to its target by definition."""
        return len(self.trace) == 1 and self.trace[0].rule in DEFINITIONAL_RULES

    @property
    def reconstructed(self) -> bool:
        return any(step.reconstructed for step in self.trace)


def required_targets(p: SurfaceParams) -> List[GeneratorSymbol]:
    """Twists along the reduced set, the slides v_i (and w_i in even mode) and y."""
    targets = [GeneratorSymbol.twist(name) for name in lambda_prime(p)]
    targets += [GeneratorSymbol.slide_v(i) for i in range(1, p.n + 1)]
    if p.is_even:
        targets += [GeneratorSymbol.slide_w(i) for i in range(1, p.n + 1)]
    return targets + [GeneratorSymbol.crosscap_slide()]


def expected_certificate_count(p: SurfaceParams) -> int:
    return len(lambda_prime(p)) + p.n * (2 if p.is_even else 1) + 1


class Certifier:
    """Replays the recursion against one chart, memoizing intermediate certificates."""

    def __init__(self, chart: CurveChart):
        self.chart = chart
        self.params = chart.params
        self._cache: Dict[GeneratorSymbol, Certificate] = {}
        self._lock = threading.RLock()

    def certify(self, target: GeneratorSymbol) -> Certificate:
        """Certificate for a required generator.

        Raises
        ------
        NotRequiredGeneratorError
            If ``target`` is not a Korkmaz generator for the active mode.
        UnboundCurveError
            If the chart lacks a curve or binding the recursion needs.
        """
        if target not in required_targets(self.params):
            raise NotRequiredGeneratorError(f"{target} is not a required generator")
        certificate = self.derive(target)
        stray = stray_symbols(certificate.word, self.params)
        if stray:
            raise CertificationError(f"certificate for {target} uses symbols outside the alphabet: {stray}")
        return certificate

    def derive(self, target: GeneratorSymbol) -> Certificate:
        """Certificate for any symbol the recursion reaches, required or intermediate."""
        with self._lock:
            if target not in self._cache:
                self._cache[target] = self._derive(target)
            return self._cache[target]

    def _derive(self, target: GeneratorSymbol) -> Certificate:
        if target.kind is SymbolKind.TWIST:
            return self._twist(target)
        if target.kind is SymbolKind.SLIDE_V:
            return self._slide_v(target)
        if target.kind is SymbolKind.SLIDE_W:
            return self._slide_w(target)
        if target.kind is SymbolKind.CROSSCAP_SLIDE:
            return self._seed(target, involution_word("W", "rho3"), "R11")
        raise CertificationError(f"no rule derives {target}")

    def _twist(self, target: GeneratorSymbol) -> Certificate:
        p = self.params
        r, k, n = p.r, p.k, p.n
        curve = CurveId.parse(target.label)
        family, index = curve.family, curve.index
        shift, unshift = involution_word("tau", "sigma"), involution_word("sigma", "tau")
        reflect_i, reflect_j = involution_word("I"), involution_word("J")

        if family == "a":
            if index == 1:
                return self._seed(target, involution_word("tau", "rho1"), "R1")
            if 2 <= index <= r:
                return self._transport(target, shift, _twist(f"a{index - 1}"), "R2")
        elif family == "c":
            if p.is_even and index == r:
                return self._seed(target, involution_word("J", "rho5"), "R12")
            if index == k + 1:
                return self._transport(target, reflect_i, _twist(f"a{k + 3}"), "R3")
            if k + 2 <= index <= r - 1:
                return self._transport(target, shift, _twist(f"c{index - 1}"), "R4")
            if 1 <= index <= k:
                return self._transport(target, unshift, _twist(f"c{index + 1}"), "R4")
        elif family == "b":
            if p.is_even and index == r + 1:
                return self._seed(target, involution_word("J", "rho4"), "R12")
            if index == k:
                return self._transport(target, reflect_i, _twist(f"c{k}"), "R5")
            if k + 1 <= index <= r:
                return self._transport(target, shift, _twist(f"b{index - 1}"), "R6")
            if 1 <= index < k:
                return self._transport(target, unshift, _twist(f"b{index + 1}"), "R6")
        elif family == "d" and index in (1, 2):
            return self._transport(target, reflect_i, _twist(f"b{index}"), "R7")
        elif family == "e" and 1 <= index <= n - 1:
            if index == 1:
                bound = self.chart.bindings.get("n1")
                if bound is None:
                    raise UnboundCurveError("the chart does not bind n1")
                return self._transport(target, reflect_j, _twist(bound), "R8", sign_curve="n1")
            return self._transport(target, involution_word("J", "I"), _twist(f"e{index - 1}"), "R8")
        raise CertificationError(f"no rule derives {target}")

    def _slide_v(self, target: GeneratorSymbol) -> Certificate:
        i = target.index
        if not 1 <= i <= self.params.n:
            raise CertificationError(f"no rule derives {target}")
        if i == 1:
            return self._seed(target, involution_word("K" if self.params.is_even else "tau", "rho2"), "R9")
        return self._transport(
            target, involution_word("tau", "sigma"), GeneratorSymbol.slide_v(i - 1), "R9", sign_curve=f"alpha{i - 1}"
        )

    def _slide_w(self, target: GeneratorSymbol) -> Certificate:
        i, n = target.index, self.params.n
        if not self.params.is_even or not 1 <= i <= n:
            raise CertificationError(f"no rule derives {target}")
        if i == n:
            return self._transport(target, involution_word("sigma"), GeneratorSymbol.slide_v(1), "R10", sign_curve="alpha1")
        return self._transport(
            target, involution_word("sigma", "tau"), GeneratorSymbol.slide_w(i + 1), "R10", sign_curve=f"beta{i + 1}"
        )

    def _reconstructed(self, rule: str) -> bool:
        return rule == "R8" and self.params.is_even

    def _seed(self, target: GeneratorSymbol, word: MappingWord, rule: str) -> Certificate:
        return Certificate(target, word, (TraceStep(rule, f"{target} = {word}"),))

    def _transport(
        self,
        target: GeneratorSymbol,
        operator: MappingWord,
        source: GeneratorSymbol,
        rule: str,
        sign_curve: Optional[str] = None,
    ) -> Certificate:
        base = self.derive(source)
        names = [symbol.label for symbol in operator.symbols()]
        eps = self.chart.sign(names, sign_curve or source.label)
        inner = base.word if eps == 1 else base.word.inverse()
        word = conjugate(operator, inner)
        power = "" if eps == 1 else "^-1"
        step = TraceStep(
            rule,
            f"{target} = ({operator}) {source}{power} ({operator})^-1",
            reconstructed=self._reconstructed(rule),
        )
        return Certificate(target, word, base.trace + (step,))


def stray_symbols(word: MappingWord, p: SurfaceParams) -> List[str]:
    """Letters of ``word`` that are not involutions of the alphabet for ``p``."""
    allowed = set(alphabet(p))
    return [str(symbol) for symbol in word.symbols() if not symbol.is_involution or symbol.label not in allowed]


def _twist(curve: str) -> GeneratorSymbol:
    return GeneratorSymbol.twist(curve)


def certify(target: GeneratorSymbol, chart: CurveChart) -> Certificate:
    return Certifier(chart).certify(target)


def certify_targets(chart: CurveChart) -> List[Certificate]:
    """Certificates for every required generator, in target order."""
    certifier = Certifier(chart)
    return [certifier.certify(target) for target in required_targets(chart.params)]


def alphabet_census(certs: Sequence[Certificate]) -> Set[str]:
    """Union of the involution names used across certificate words."""
    return {symbol.label for cert in certs for symbol in cert.word.symbols() if symbol.is_involution}


class CertificateModel(BaseModel):
    """One certificate as stored on disk."""

    target: str = Field(..., description="Generator symbol, e.g. t[a3], v[2] or y.")
    word: List[str] = Field(..., description="Involution symbols, leftmost first.")
    trace: List[str] = Field(default_factory=list, description="Rule ids in the order they were applied.")


class CertificateHeader(BaseModel):
    g: int
    n: int
    parity: str
    count: int


class CertificateFileModel(BaseModel):
    """The on-disk certificate file."""

    header: CertificateHeader
    certificates: List[CertificateModel]


def write_certificates(certs: Sequence[Certificate], p: SurfaceParams, path: Path):
    model = CertificateFileModel(
        header=CertificateHeader(g=p.g, n=p.n, parity=p.parity.value, count=len(certs)),
        certificates=[
            CertificateModel(target=str(cert.target), word=cert.word.tokens(), trace=cert.rules) for cert in certs
        ],
    )
    srsly.write_json(path, model.model_dump(), indent=2)


def certify_all(g: int, n: int, out: Path, chart: Optional[CurveChart] = None) -> List[Certificate]:
    """Certifies every required generator for (g, n) and writes them to ``out``."""
    p = build_params(g, n)
    certs = certify_targets(chart if chart is not None else default_chart(p))
    write_certificates(certs, p, out)
    return certs


def read_certificates(path: Path) -> Tuple[CertificateHeader, List[Certificate]]:
    """Reads a certificate file.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    CertificateFileError
        If the file does not follow the schema or names unknown symbols.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Certificate file not found: {path}")
    try:
        model = CertificateFileModel.model_validate(srsly.read_json(path))
    except (ValidationError, ValueError) as e:
        raise CertificateFileError(f"{path}: {e}") from e
    certs = []
    for position, entry in enumerate(model.certificates):
        try:
            target = GeneratorSymbol.parse(entry.target)
            word = MappingWord.parse(entry.word)
        except ValueError as e:
            raise CertificateFileError(f"certificates[{position}]: {e}") from e
        certs.append(Certificate(target, word, tuple(TraceStep(rule) for rule in entry.trace)))
    return model.header, certs
