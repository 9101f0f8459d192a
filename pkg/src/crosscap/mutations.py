import dataclasses
from typing import Optional, Sequence, Tuple

import numpy as np
import polars as pl

from crosscap.certify import Certificate, TraceStep, certify_targets
from crosscap.chart import CurveChart, TableEntry
from crosscap.config import MUTATION_COUNT, MUTATION_SEED
from crosscap.logging import console
from crosscap.rep import Evaluator
from crosscap.surface import CurveId, Side
from crosscap.words import GeneratorSymbol, MappingWord, alphabet


def mutate_certificate(
    cert: Certificate, rng: np.random.Generator, symbols: Sequence[str]
) -> Tuple[Certificate, dict]:
    """Deletes one letter of the word or swaps it for a different alphabet symbol.

    Returns
    -------
    tuple
        The mutated certificate and a record of what was changed.
    """
    letters = list(cert.word.letters)
    position = int(rng.integers(len(letters)))
    symbol, exponent = letters[position]
    kind = "delete" if rng.random() < 0.5 else "substitute"
    replacement = ""
    if kind == "delete":
        del letters[position]
    else:
        choices = [name for name in symbols if name != symbol.label]
        replacement = choices[int(rng.integers(len(choices)))]
        letters[position] = (GeneratorSymbol.involution(replacement), exponent)
    mutated = Certificate(cert.target, MappingWord(tuple(letters)), cert.trace + (TraceStep("mutation", kind),))
    record = {
        "target": str(cert.target),
        "kind": kind,
        "position": position,
        "letter": str(symbol),
        "replacement": replacement,
    }
    return mutated, record


def mutation_sweep(
    chart: CurveChart, count: int = MUTATION_COUNT, seed: int = MUTATION_SEED
) -> Tuple[pl.DataFrame, float]:
    """Applies ``count`` random mutations to the chart's certificates and checks each is caught.

    Returns
    -------
    tuple
        One row per mutation, with a ``detected`` column, and the detection rate.
    """
    rng = np.random.default_rng(seed)
    certs = certify_targets(chart)
    symbols = alphabet(chart.params)
    evaluator = Evaluator(chart)
    rows = []
    with console.status(f"Running {count} certificate mutations..."):
        for _ in range(count):
            cert = certs[int(rng.integers(len(certs)))]
            mutated, record = mutate_certificate(cert, rng, symbols)
            verdict = evaluator.check_identity(mutated.word, MappingWord.of(cert.target))
            record["detected"] = not verdict.holds
            rows.append(record)
    table = pl.DataFrame(rows)
    rate = table["detected"].mean() if table.height else 1.0
    style = "green" if rate == 1.0 else "red"
    console.log(f"Mutation detection rate: {rate:.0%} over {table.height} mutations", style=style)
    return table, rate


def corrupt_chart(chart: CurveChart, key: Optional[Tuple[str, str]] = None) -> CurveChart:
    """A copy of the chart with one two-sided table entry pointing at the wrong curve.

    The default victim is the first two-sided entry of the table. The new
    image is the next curve of the same family whose class differs.
    """
    table = dict(chart.involution_table)
    if key is None:
        key = next(entry for entry in table if chart.sided.get(entry[1]) is Side.TWO_SIDED)
    entry = table[key]
    current = chart.image_class(entry)
    family = CurveId.parse(key[1]).family
    candidates = sorted(
        (name for name, value in chart.classes.items() if CurveId.parse(name).family == family and value != current),
        key=CurveId.parse,
    )
    if not candidates:
        raise ValueError(f"no curve to redirect {key} to")
    table[key] = TableEntry(image=candidates[0], eps=entry.eps)
    console.log(f"Corrupted table entry {key[0]}({key[1]}) -> {candidates[0]}", style="yellow")
    return dataclasses.replace(chart, involution_table=table)
