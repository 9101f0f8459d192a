import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple, Union

import polars as pl
import srsly
from pydantic import BaseModel, Field

from crosscap.certify import (
    Certificate,
    Certifier,
    alphabet_census,
    read_certificates,
    required_targets,
    stray_symbols,
)
from crosscap.chart import CurveChart, default_chart, puncture_reflections
from crosscap.chart_io import load_chart
from crosscap.config import ORACLE_MAX, WORKERS
from crosscap.errors import ChartParseError, CrosscapError
from crosscap.logging import console
from crosscap.perms import closure, format_cycles, group_order, lemma_generators, schreier_sims, symn_generated
from crosscap.rep import Evaluator
from crosscap.surface import CurveId, Side, SurfaceParams, build_params, expected_alphabet_size, lambda_curves
from crosscap.validation import validate_chart
from crosscap.words import GeneratorSymbol, MappingWord, alphabet, involution_word

Verdict = Literal["pass", "fail", "skipped (n=0)", "skipped (n<=1)"]


class Check(BaseModel):
    """One verified statement."""

    id: str
    description: str
    anchor: str = Field(..., description="The statement checked, or 'plumbing'.")
    representation: str = Field(..., description="chart, homology, punctures, both or permutations.")
    verdict: Verdict
    definitional: bool = Field(False, description="True when the chart was built to satisfy exactly this identity.")
    detail: str = ""


class Census(BaseModel):
    symbols: List[str]
    size: int
    expected: int
    unused: List[str] = Field(default_factory=list)
    holds: bool


class PiSummary(BaseModel):
    surjective: bool
    images: Dict[str, str]
    order: int
    expected: int


class Generation(BaseModel):
    """The two halves of the exact-sequence argument."""

    pure_covered: bool
    pi_surjective: bool
    generated: bool


class Counts(BaseModel):
    substantive_pass: int
    substantive_total: int
    definitional_pass: int
    definitional_total: int
    skipped: int
    failed: int


class Runtime(BaseModel):
    """Run metadata; not part of the determinism contract."""

    generated_at: str
    cache_hits: int
    cache_misses: int


class VerificationReport(BaseModel):
    params: Dict[str, Optional[Union[int, str]]]
    chart: str
    chart_id: str
    checks: List[Check]
    census: Census
    pi: PiSummary
    generation: Generation
    counts: Counts
    overall: Literal["pass", "fail"]
    runtime: Runtime

    @property
    def passed(self) -> bool:
        return self.overall == "pass"

    def failures(self) -> List[Check]:
        return [check for check in self.checks if check.verdict == "fail"]

    def deterministic_payload(self) -> dict:
        return self.model_dump(mode="json", exclude={"runtime"})


@dataclass
class PendingCheck:
    id: str
    description: str
    anchor: str
    representation: str
    run: Callable[[], Tuple[Verdict, str]]
    definitional: bool = False

    def execute(self) -> Check:
        try:
            verdict, detail = self.run()
        except CrosscapError as e:
            verdict, detail = "fail", f"{type(e).__name__}: {e}"
        return Check(
            id=self.id,
            description=self.description,
            anchor=self.anchor,
            representation=self.representation,
            verdict=verdict,
            definitional=self.definitional,
            detail=detail,
        )


def _skip_reason(p: SurfaceParams) -> Verdict:
    return "skipped (n=0)" if p.n == 0 else "skipped (n<=1)"


def _twist(curve: str, exponent: int = 1) -> MappingWord:
    return MappingWord.of((GeneratorSymbol.twist(curve), exponent))


def _slide(key: str, exponent: int = 1) -> MappingWord:
    if key == "y":
        symbol = GeneratorSymbol.crosscap_slide()
    elif key.startswith("v"):
        symbol = GeneratorSymbol.slide_v(int(key[1:]))
    else:
        symbol = GeneratorSymbol.slide_w(int(key[1:]))
    return MappingWord.of((symbol, exponent))


def _conj(operator: MappingWord, inner: MappingWord) -> MappingWord:
    """operator inner operator^-1, left unreduced so the evaluator sees every letter."""
    return operator * inner * operator.inverse()


class _SuiteBuilder:
    """Collects the pending checks for one chart."""

    def __init__(self, chart: CurveChart, evaluator: Evaluator):
        self.chart = chart
        self.p = chart.params
        self.evaluator = evaluator
        self.pending: List[PendingCheck] = []

    def identity(self, check_id, description, anchor, lhs: MappingWord, rhs: MappingWord, definitional=False, homology_only=False):
        def run():
            verdict = self.evaluator.check_identity(lhs, rhs, definitional)
            failed = [] if verdict.homology else ["homology"]
            if verdict.punctures is False and not homology_only:
                failed.append("punctures")
            if failed:
                return "fail", f"unequal in {', '.join(failed)}"
            return "pass", "punctures not compared (n<=1)" if verdict.punctures is None else ""

        representation = "homology" if homology_only else "both"
        self.pending.append(PendingCheck(check_id, description, anchor, representation, run, definitional))

    def skipped(self, check_id, description, anchor, representation="both"):
        verdict = _skip_reason(self.p)
        self.pending.append(PendingCheck(check_id, description, anchor, representation, lambda: (verdict, "")))

    def chart_checks(self):
        for result in validate_chart(self.chart, self.p):
            self.pending.append(
                PendingCheck(
                    result.id,
                    result.description,
                    result.anchor,
                    "chart",
                    lambda result=result: ("pass" if result.passed else "fail", result.detail),
                )
            )

    def involutivity(self):
        chart_declared = set(self.chart.involution_homology)
        for name in alphabet(self.p):
            word = involution_word(name, name)
            description = f"{name} squares to the identity"
            if name == "rho2" and self.p.n == 0:
                self.skipped(f"involution.{name}", description, "rho_2 is an involution")
                continue
            anchor = "plumbing" if name in chart_declared else f"{name} is an involution"
            self.identity(f"involution.{name}", description, anchor, word, MappingWord(), definitional=name in chart_declared)

    def transport(self, check_id, anchor, target: MappingWord, operator: Sequence[str], source: str, sign_curve: str):
        """target = operator source^eps operator^-1, with eps the chart's sign of operator on sign_curve."""
        try:
            eps = self.chart.sign(list(operator), sign_curve)
        except CrosscapError as e:
            message = f"{type(e).__name__}: {e}"
            description = f"{target} = ({' '.join(operator)}) {source}^eps ({' '.join(operator)})^-1"
            self.pending.append(PendingCheck(check_id, description, anchor, "both", lambda: ("fail", message)))
            return
        inner = _twist(source, eps) if CurveId.parse(sign_curve).family not in ("alpha", "beta") else _slide(source, eps)
        description = f"{target} = ({' '.join(operator)}) {source}^{eps} ({' '.join(operator)})^-1"
        self.identity(check_id, description, anchor, target, _conj(involution_word(*operator), inner))

    def lemmas(self):
        p = self.p
        r, k, n = p.r, p.k, p.n
        shift, unshift = ("tau", "sigma"), ("sigma", "tau")

        self.identity("lemma.R1.a1", "t_{a_1} = tau rho_1", "t_{a_1} is a product of tau and rho_1",
                      _twist("a1"), involution_word("tau", "rho1"), definitional=True)
        self.transport("lemma.tau.a1", "tau t_{a_1} tau = t_{a_1}^{-1}", _twist("a1"), ("tau",), "a1", "a1")
        for i in range(2, r + 1):
            self.transport(f"lemma.R2.a{i}", "t_{a_i} = R t_{a_{i-1}} R^{-1}", _twist(f"a{i}"), shift, f"a{i - 1}", f"a{i - 1}")
        self.transport(f"lemma.R3.c{k + 1}", "t_{c_{k+1}} = I t_{a_{k+3}}^{-1} I",
                       _twist(f"c{k + 1}"), ("I",), f"a{k + 3}", f"a{k + 3}")
        for j in range(k + 2, r):
            self.transport(f"lemma.R4.c{j}", "t_{c_j} = R t_{c_{j-1}} R^{-1}", _twist(f"c{j}"), shift, f"c{j - 1}", f"c{j - 1}")
        for j in range(1, k + 1):
            self.transport(f"lemma.R4.c{j}", "t_{c_j} = R^{-1} t_{c_{j+1}} R", _twist(f"c{j}"), unshift, f"c{j + 1}", f"c{j + 1}")
        self.transport(f"lemma.R5.b{k}", "t_{b_k} = I t_{c_k}^{-1} I", _twist(f"b{k}"), ("I",), f"c{k}", f"c{k}")
        for i in range(k + 1, r + 1):
            self.transport(f"lemma.R6.b{i}", "t_{b_i} = R t_{b_{i-1}} R^{-1}", _twist(f"b{i}"), shift, f"b{i - 1}", f"b{i - 1}")
        for i in range(1, k):
            self.transport(f"lemma.R6.b{i}", "t_{b_i} = R^{-1} t_{b_{i+1}} R", _twist(f"b{i}"), unshift, f"b{i + 1}", f"b{i + 1}")
        for i in (1, 2):
            self.transport(f"lemma.R7.d{i}", f"t_{{d_{i}}} = I t_{{b_{i}}}^{{-1}} I", _twist(f"d{i}"), ("I",), f"b{i}", f"b{i}")

        if n >= 2:
            bound = self.chart.bindings.get("n1", "n1")
            self.transport("lemma.R8.e1", "J(n_1) = e_1", _twist("e1"), ("J",), bound, "n1")
            for i in range(2, n):
                self.transport(f"lemma.R8.e{i}", "t_{e_i} = T t_{e_{i-1}} T^{-1}", _twist(f"e{i}"), ("J", "I"), f"e{i - 1}", f"e{i - 1}")
        else:
            self.skipped("lemma.R8.e1", "t_{e_1} = J t_{n_1}^-1 J", "J(n_1) = e_1")

        self.slides()

        self.identity("lemma.R11.y", "y = W rho_3", "the product of involutions W and rho_3",
                      _slide("y"), involution_word("W", "rho3"), definitional=True)
        self.identity("lemma.W.y", "W y W = y^-1", "W y W = y^{-1}",
                      _conj(involution_word("W"), _slide("y")), _slide("y", -1))
        self.identity("lemma.y.square", "y^2 = t_xi", "y^2 is the Dehn twist along xi",
                      _slide("y") * _slide("y"), _twist("xi"), homology_only=True)

        if p.is_even:
            self.identity(f"lemma.R12.b{r + 1}", f"t_{{b_{r + 1}}} = J rho_4", "t_{b_{r+1}} = J rho_4",
                          _twist(f"b{r + 1}"), involution_word("J", "rho4"), definitional=True)
            self.identity(f"lemma.R12.c{r}", f"t_{{c_{r}}} = J rho_5", "t_{c_r} = J rho_5",
                          _twist(f"c{r}"), involution_word("J", "rho5"), definitional=True)

        self.table_echo()

    def slides(self):
        p, n = self.p, self.p.n
        if n == 0:
            self.skipped("lemma.R9.v1", "v_1 = tau rho_2", "rho_2 is a product of tau and v_1")
            return
        first = "K" if p.is_even else "tau"
        self.identity("lemma.R9.v1", f"v_1 = {first} rho_2", f"rho_2 is the product {first} v_1",
                      _slide("v1"), involution_word(first, "rho2"), definitional=True)
        self.identity(f"lemma.{first}.v1", f"{first} v_1 {first} = v_1^-1", f"{first} v_1 {first} = v_1^{{-1}}",
                      _conj(involution_word(first), _slide("v1")), _slide("v1", -1))
        for j in range(2, n + 1):
            self.transport(f"lemma.R9.v{j}", "v_j = R v_{j-1} R^{-1}", _slide(f"v{j}"), ("tau", "sigma"), f"v{j - 1}", f"alpha{j - 1}")
        if p.is_even:
            self.transport(f"lemma.R10.w{n}", "sigma(alpha_1) = beta_n", _slide(f"w{n}"), ("sigma",), "v1", "alpha1")
            for j in range(n - 1, 0, -1):
                self.transport(f"lemma.R10.w{j}", "R(beta_n) = beta_{n-1}", _slide(f"w{j}"), ("sigma", "tau"), f"w{j + 1}", f"beta{j + 1}")

    def table_echo(self):
        """f t_c f^-1 = t_{f(c)}^eps for every table entry, and the slide analogue on alpha curves."""
        chart = self.chart
        for (name, curve), entry in chart.involution_table.items():
            image = entry.image if isinstance(entry.image, str) else chart.name_of(entry.image)
            check_id = f"echo.{name}.{curve}"
            description = f"{name} t_{curve} {name} = t_{image}^{entry.eps}"
            if image is None:
                continue
            if chart.sided.get(curve) is Side.TWO_SIDED:
                self.identity(check_id, description, "t_{f(a)}^eps = f t_a f^{-1}",
                              _conj(involution_word(name), _twist(curve)), _twist(image, entry.eps))
                continue
            source, target = _slide_key(curve), _slide_key(image)
            if source and target:
                self.identity(check_id, f"{name} {source} {name} = {target}^{entry.eps}",
                              "the puncture slide of f(x) along f(alpha)",
                              _conj(involution_word(name), _slide(source)), _slide(target, entry.eps))

    def certificates(self, certs: Sequence[Certificate]):
        for cert in certs:
            self.certificate(cert)

    def certificate(self, cert: Certificate):
        target = MappingWord.of(cert.target)
        self.identity(f"cert.{cert.target}", f"certificate for {cert.target} evaluates to it",
                      f"{cert.target} is a product of involutions", cert.word, target, definitional=cert.definitional)
        stray = stray_symbols(cert.word, self.p)
        self.pending.append(
            PendingCheck(f"alphabet.{cert.target}", f"certificate for {cert.target} uses only alphabet involutions",
                         f"{cert.target} is a product of involutions", "chart",
                         lambda: ("fail", f"uses {', '.join(stray)}") if stray else ("pass", ""))
        )

        def exact():
            if self.p.n < 2:
                return _skip_reason(self.p), ""
            image = self.evaluator.eval(cert.word)
            return ("pass", "") if image.punctures.is_identity() else ("fail", format_cycles(image.punctures))

        self.pending.append(
            PendingCheck(f"exact.{cert.target}", f"certificate for {cert.target} fixes every puncture",
                         "1 -> PN -> N -> Sym_n -> 1", "punctures", exact)
        )

    def structure(self):
        symbols = [GeneratorSymbol.involution(name) for name in alphabet(self.p)]
        symbols += [GeneratorSymbol.twist(name) for name in lambda_curves(self.p)]
        symbols += [_slide(key).symbols()[0] for key in self.chart.nontwist_homology]
        for symbol in symbols:
            if symbol.label == "rho2" and self.p.n == 0:
                continue

            def run(symbol=symbol):
                image = self.evaluator.symbol_image(symbol)
                return ("pass", "") if self.evaluator.is_structural(image) else ("fail", "form or delta-consistency broken")

            self.pending.append(
                PendingCheck(f"structure.{symbol}", f"image of {symbol} preserves the form and puncture classes",
                             "plumbing", "both", run)
            )

    def permutations(self) -> PiSummary:
        p = self.p
        images = {name: self.chart.involution_puncture[name] for name in ("sigma", "tau", "W") if name in self.chart.involution_puncture}
        printed = {}
        if p.n >= 2:
            printed = dict(zip(("sigma", "tau", "W"), lemma_generators(p.n, p.parity.value)))
        for name in ("sigma", "tau", "W"):
            description = f"pi({name}) matches its printed cycle formula"
            if p.n < 2:
                self.skipped(f"pi.formula.{name}", description, f"pi({name})", "punctures")
                continue
            expected = printed[name]
            actual = images.get(name)
            self.pending.append(
                PendingCheck(
                    f"pi.formula.{name}", description, f"pi({name}) = {format_cycles(expected)}", "punctures",
                    lambda actual=actual, expected=expected: (
                        ("pass", "") if actual == expected else ("fail", f"got {format_cycles(actual) if actual else 'nothing'}")
                    ),
                )
            )
        expected_order = math.factorial(p.n)
        if p.n < 2:
            order = expected_order
        elif len(images) == 3:
            order = group_order(schreier_sims(list(images.values()), p.n))
        else:
            order = 0
        surjective = p.n <= 1 or order == expected_order
        if p.n < 2:
            self.skipped("pi.surjective", "pi(sigma), pi(tau), pi(W) generate Sym_n", "the restriction of pi to K is a surjection", "permutations")
        else:
            self.pending.append(
                PendingCheck(
                    "pi.surjective", "pi(sigma), pi(tau), pi(W) generate Sym_n",
                    "the restriction of pi to K is a surjection", "permutations",
                    lambda: ("pass", f"order {order}") if surjective else ("fail", f"order {order}, expected {expected_order}"),
                )
            )
        return PiSummary(
            surjective=surjective,
            images={name: format_cycles(perm) for name, perm in images.items()},
            order=order,
            expected=expected_order,
        )


def _slide_key(curve: str) -> Optional[str]:
    family = CurveId.parse(curve).family
    if family == "alpha":
        return f"v{CurveId.parse(curve).index}"
    if family == "beta":
        return f"w{CurveId.parse(curve).index}"
    return None


def _census(certs: Sequence[Certificate], p: SurfaceParams) -> Census:
    used = alphabet_census(certs)
    letters = alphabet(p)
    symbols = [name for name in letters if name in used]
    unused = [name for name in letters if name not in used]
    extra = sorted(used - set(letters))
    # below two punctures the e-curves, or all slides, are absent and some letters are never needed
    holds = not extra and (not unused if p.n >= 2 else True)
    return Census(symbols=symbols + extra, size=len(used), expected=expected_alphabet_size(p), unused=unused, holds=holds)


def _census_check(census: Census, p: SurfaceParams) -> Check:
    if p.n >= 2:
        rule = f"certificates use exactly the {census.expected} alphabet involutions"
    else:
        rule = f"certificates use a subset of the {census.expected} alphabet involutions (n={p.n})"
    unused = f"; not needed: {', '.join(census.unused)}" if census.unused else ""
    return Check(
        id="census.alphabet",
        description=rule,
        anchor="generated by involutions",
        representation="chart",
        verdict="pass" if census.holds else "fail",
        detail=f"{census.size} used{unused}",
    )


def _counts(checks: Sequence[Check]) -> Counts:
    substantive = [check for check in checks if not check.definitional and not check.verdict.startswith("skipped")]
    definitional = [check for check in checks if check.definitional and not check.verdict.startswith("skipped")]
    return Counts(
        substantive_pass=sum(check.verdict == "pass" for check in substantive),
        substantive_total=len(substantive),
        definitional_pass=sum(check.verdict == "pass" for check in definitional),
        definitional_total=len(definitional),
        skipped=sum(check.verdict.startswith("skipped") for check in checks),
        failed=sum(check.verdict == "fail" for check in checks),
    )


def _execute(pending: Sequence[PendingCheck], workers: Optional[int]) -> List[Check]:
    with ThreadPoolExecutor(max_workers=workers) as executor:
        checks = list(executor.map(PendingCheck.execute, pending))
    return sorted(checks, key=lambda check: check.id)


def _certify_all_targets(chart: CurveChart, builder: _SuiteBuilder) -> List[Certificate]:
    certifier = Certifier(chart)
    certs = []
    for target in required_targets(chart.params):
        try:
            certs.append(certifier.certify(target))
        except CrosscapError as e:
            message = f"{type(e).__name__}: {e}"
            builder.pending.append(
                PendingCheck(f"cert.{target}", f"certificate for {target} evaluates to it", "plumbing", "both",
                             lambda message=message: ("fail", message))
            )
    return certs


def _resolve_chart(p: SurfaceParams, chart: Union[CurveChart, Path, str, None]) -> Tuple[CurveChart, str]:
    if chart is None:
        return default_chart(p), "default"
    if isinstance(chart, CurveChart):
        loaded, source = chart, "in-memory"
    else:
        loaded, source = load_chart(Path(chart)), str(chart)
    if loaded.params != p:
        raise ChartParseError(f"chart is for g={loaded.params.g}, n={loaded.params.n}", "params")
    return loaded, source


def _assemble(
    p: SurfaceParams,
    chart: CurveChart,
    source: str,
    builder: _SuiteBuilder,
    certs: Sequence[Certificate],
    pi: PiSummary,
    workers: Optional[int],
    covered_targets: bool,
) -> VerificationReport:
    census = _census(certs, p)
    checks = sorted(_execute(builder.pending, workers) + [_census_check(census, p)], key=lambda check: check.id)
    cert_ids = {f"{kind}.{target}" for target in required_targets(p) for kind in ("cert", "alphabet")}
    pure_covered = covered_targets and all(
        check.verdict == "pass" for check in checks if check.id in cert_ids
    ) and cert_ids <= {check.id for check in checks}
    generation = Generation(pure_covered=pure_covered, pi_surjective=pi.surjective, generated=pure_covered and pi.surjective)
    counts = _counts(checks)
    overall = counts.failed == 0 and census.holds and pi.surjective and generation.generated
    return VerificationReport(
        params=p.as_dict(),
        chart=source,
        chart_id=chart.chart_id,
        checks=checks,
        census=census,
        pi=pi,
        generation=generation,
        counts=counts,
        overall="pass" if overall else "fail",
        runtime=Runtime(
            generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            cache_hits=builder.evaluator.hits,
            cache_misses=builder.evaluator.misses,
        ),
    )


def run_suite(
    g: int,
    n: int,
    chart: Union[CurveChart, Path, str, None] = None,
    workers: Optional[int] = WORKERS,
) -> VerificationReport:
    """Runs every check for (g, n).

    Parameters
    ----------
    g, n : int
        Genus and puncture count.
    chart : CurveChart, Path or None
        A chart or chart file; the default chart when None.
    workers : int, optional
        Worker threads for the check pool.

    Returns
    -------
    VerificationReport
        The report; ``overall`` is "pass" iff nothing failed, the census holds
        and pi(sigma), pi(tau), pi(W) generate Sym_n.

    Raises
    ------
    UnsupportedParamsError
        If (g, n) is outside the supported range.
    ChartParseError
        If the chart file is malformed or belongs to other parameters.
    """
    p = build_params(g, n)
    chart, source = _resolve_chart(p, chart)
    builder = _SuiteBuilder(chart, Evaluator(chart))
    builder.chart_checks()
    builder.involutivity()
    builder.lemmas()
    certs = _certify_all_targets(chart, builder)
    builder.certificates(certs)
    builder.structure()
    pi = builder.permutations()
    report = _assemble(p, chart, source, builder, certs, pi, workers, covered_targets=True)
    style = "green" if report.passed else "red"
    console.log(
        f"g={g}, n={n}: {report.counts.substantive_pass}/{report.counts.substantive_total} substantive checks pass, "
        f"census {report.census.size}, overall {report.overall}",
        style=style,
    )
    return report


def check_certificates(
    path: Path,
    chart: Union[CurveChart, Path, str, None] = None,
    workers: Optional[int] = WORKERS,
) -> VerificationReport:
    """Re-evaluates every certificate of a file against both representations.

    Raises
    ------
    CertificateFileError
        If the file is malformed.
    """
    header, certs = read_certificates(path)
    p = build_params(header.g, header.n)
    chart, source = _resolve_chart(p, chart)
    builder = _SuiteBuilder(chart, Evaluator(chart))
    builder.certificates(certs)

    present = {cert.target for cert in certs}
    missing = [str(target) for target in required_targets(p) if target not in present]
    builder.pending.append(
        PendingCheck("certfile.count", "header count matches the certificates", "plumbing", "chart",
                     lambda: ("pass", "") if header.count == len(certs) else ("fail", f"header {header.count}, found {len(certs)}"))
    )
    builder.pending.append(
        PendingCheck("certfile.coverage", "every required generator has a certificate", "plumbing", "chart",
                     lambda: ("pass", "") if not missing else ("fail", f"missing {', '.join(missing)}"))
    )
    pi = builder.permutations()
    return _assemble(p, chart, source, builder, certs, pi, workers, covered_targets=not missing)


def write_report(report: VerificationReport, path: Path):
    srsly.write_json(path, report.model_dump(mode="json"), indent=2)


def symn_sweep(max_n: int, oracle_max: int = ORACLE_MAX) -> pl.DataFrame:
    """Checks the Sym_n lemma and the pi-image generators for n = 1..max_n.

    Returns
    -------
    pl.DataFrame
        One row per n with the lemma verdict, the pi-generator verdict and,
        for n <= oracle_max, whether a brute-force closure agrees with both.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = []
    with console.status("Sweeping Sym_n lemmas..."):
        for n in range(1, max_n + 1):
            parity = "odd" if n % 2 else "even"
            lemma = list(lemma_generators(n, parity))
            reflections = list(puncture_reflections(n).values())
            expected = math.factorial(n)
            lemma_order = group_order(schreier_sims(lemma, n))
            pi_order = group_order(schreier_sims(reflections, n))
            oracle = None
            if n <= oracle_max:
                oracle = (len(closure(lemma, n)) == expected) == (lemma_order == expected) and (
                    len(closure(reflections, n)) == expected
                ) == (pi_order == expected)
            rows.append(
                {
                    "n": n,
                    "parity": parity,
                    "expected": expected,
                    "lemma_order": lemma_order,
                    "lemma_generated": symn_generated(n, parity),
                    "pi_order": pi_order,
                    "pi_generated": pi_order == expected,
                    "oracle_agrees": oracle,
                }
            )
    return pl.DataFrame(rows, schema_overrides={"oracle_agrees": pl.Boolean})
