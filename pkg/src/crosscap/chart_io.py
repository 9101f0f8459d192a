import re
from pathlib import Path
from typing import Dict, List

import srsly
from pydantic import BaseModel, Field, ValidationError

from crosscap.chart import CurveChart, TableEntry, chart_involutions
from crosscap.errors import ChartParseError, DimensionMismatchError, PermutationError
from crosscap.gf2 import Gf2Matrix, Gf2Vector
from crosscap.perms import format_cycles, parse_cycles
from crosscap.surface import Side, SurfaceParams, auxiliary_curves, build_params, lambda_curves

BITSTRING_RE = re.compile(r"^[01]+$")


class ParamsModel(BaseModel):
    """Genus and puncture count."""

    g: int = Field(..., description="Genus of the surface.")
    n: int = Field(..., description="Number of punctures.")


class CurveModel(BaseModel):
    """A curve class and its sidedness."""

    bits: str = Field(..., description="Bit-string of the mod-2 class, leftmost is mu_1.")
    sided: Side = Field(..., description="Whether a regular neighbourhood is an annulus or a Moebius band.")


class TableEntryModel(BaseModel):
    """One row of an involution's action table."""

    curve: str = Field(..., description="Curve the involution acts on.")
    image: str = Field(..., description="Image curve name or an explicit bit-string.")
    eps: int = Field(-1, description="Orientation sign, +1 or -1.")


class InvolutionModel(BaseModel):
    """Homology matrix, puncture permutation and action table of a chart involution."""

    matrix: List[str] = Field(..., description="Rows of the homology matrix as bit-strings.")
    perm: str = Field(..., description="Puncture permutation in cycle notation.")
    eps_default: int = Field(-1, description="Orientation sign on curves missing from the table.")
    table: List[TableEntryModel] = Field(default_factory=list)


class NontwistEntryModel(BaseModel):
    """Homology matrix of y or a puncture slide."""

    matrix: List[str]
    companion: str | None = Field(None, description="Two-sided curve y slides its crosscap along.")


class NontwistModel(BaseModel):
    y: NontwistEntryModel
    v: List[NontwistEntryModel] = Field(default_factory=list)
    w: List[NontwistEntryModel] = Field(default_factory=list)


class ChartModel(BaseModel):
    """The on-disk chart schema."""

    params: ParamsModel
    curves: Dict[str, CurveModel]
    involutions: Dict[str, InvolutionModel]
    nontwist: NontwistModel
    bindings: Dict[str, str] = Field(default_factory=dict)


def chart_to_model(chart: CurveChart) -> ChartModel:
    involutions = {}
    for name, matrix in chart.involution_homology.items():
        rows = [
            TableEntryModel(
                curve=curve,
                image=entry.image if isinstance(entry.image, str) else entry.image.to_string(),
                eps=entry.eps,
            )
            for (involution, curve), entry in chart.involution_table.items()
            if involution == name
        ]
        involutions[name] = InvolutionModel(
            matrix=matrix.to_strings(),
            perm=format_cycles(chart.involution_puncture[name]),
            eps_default=chart.eps_default[name],
            table=rows,
        )
    p = chart.params
    nontwist = NontwistModel(
        y=NontwistEntryModel(matrix=chart.nontwist_homology["y"].to_strings(), companion=chart.y_companion),
        v=[NontwistEntryModel(matrix=chart.nontwist_homology[f"v{i}"].to_strings()) for i in range(1, p.n + 1)],
        w=[NontwistEntryModel(matrix=chart.nontwist_homology[f"w{i}"].to_strings()) for i in range(1, p.n + 1)]
        if p.is_even
        else [],
    )
    return ChartModel(
        params=ParamsModel(g=p.g, n=p.n),
        curves={
            name: CurveModel(bits=vector.to_string(), sided=chart.sided[name])
            for name, vector in chart.classes.items()
        },
        involutions=involutions,
        nontwist=nontwist,
        bindings=dict(chart.bindings),
    )


def _vector(text: str, dim: int, location: str) -> Gf2Vector:
    if not BITSTRING_RE.match(text):
        raise ChartParseError(f"not a bit-string: {text!r}", location)
    if len(text) != dim:
        raise ChartParseError(f"dimension mismatch: expected {dim} bits, got {len(text)}", location)
    return Gf2Vector.from_string(text)


def _matrix(rows: List[str], dim: int, location: str) -> Gf2Matrix:
    if len(rows) != dim:
        raise ChartParseError(f"dimension mismatch: expected {dim} rows, got {len(rows)}", location)
    for index, row in enumerate(rows):
        _vector(row, dim, f"{location}[{index}]")
    try:
        return Gf2Matrix.from_strings(rows)
    except DimensionMismatchError as e:
        raise ChartParseError(str(e), location) from e


def model_to_chart(model: ChartModel) -> CurveChart:
    """Converts a parsed file into a chart, checking completeness and dimensions.

    Raises
    ------
    ChartParseError
        On unsupported params, an incomplete curve set or malformed entries.
    """
    try:
        p: SurfaceParams = build_params(model.params.g, model.params.n)
    except ValueError as e:
        raise ChartParseError(str(e), "params") from e

    required = lambda_curves(p) + auxiliary_curves(p)
    missing = [name for name in required if name not in model.curves]
    if missing:
        raise ChartParseError(f"incomplete curve set: missing {', '.join(missing)}", "curves")

    expected = set(chart_involutions(p))
    declared = set(model.involutions)
    if declared != expected:
        missing, extra = sorted(expected - declared), sorted(declared - expected)
        problems = ([f"missing {', '.join(missing)}"] if missing else []) + ([f"unexpected {', '.join(extra)}"] if extra else [])
        raise ChartParseError(f"involution set mismatch: {'; '.join(problems)}", "involutions")

    classes = {name: _vector(curve.bits, p.dim, f"curves.{name}.bits") for name, curve in model.curves.items()}
    sided = {name: curve.sided for name, curve in model.curves.items()}

    table, homology, punctures, eps_default = {}, {}, {}, {}
    for name, involution in model.involutions.items():
        location = f"involutions.{name}"
        homology[name] = _matrix(involution.matrix, p.dim, f"{location}.matrix")
        try:
            punctures[name] = parse_cycles(involution.perm, p.n)
        except (PermutationError, ValueError) as e:
            raise ChartParseError(str(e), f"{location}.perm") from e
        eps_default[name] = involution.eps_default
        for index, row in enumerate(involution.table):
            row_location = f"{location}.table[{index}]"
            if row.eps not in (1, -1):
                raise ChartParseError(f"eps must be +1 or -1, got {row.eps}", row_location)
            if row.curve not in classes:
                raise ChartParseError(f"unknown curve {row.curve}", row_location)
            if BITSTRING_RE.match(row.image):
                image = _vector(row.image, p.dim, f"{row_location}.image")
            elif row.image in classes:
                image = row.image
            else:
                raise ChartParseError(f"unknown curve {row.image}", f"{row_location}.image")
            table[(name, row.curve)] = TableEntry(image=image, eps=row.eps)

    nontwist = {"y": _matrix(model.nontwist.y.matrix, p.dim, "nontwist.y.matrix")}
    for family in ("v", "w") if p.is_even else ("v",):
        entries = getattr(model.nontwist, family)
        if len(entries) != p.n:
            raise ChartParseError(f"expected {p.n} {family}-slides, got {len(entries)}", f"nontwist.{family}")
        for index, entry in enumerate(entries, start=1):
            nontwist[f"{family}{index}"] = _matrix(entry.matrix, p.dim, f"nontwist.{family}[{index - 1}].matrix")

    companion = model.nontwist.y.companion
    if companion is None or companion not in classes:
        raise ChartParseError("y needs a companion curve from the chart", "nontwist.y.companion")

    return CurveChart(
        params=p,
        classes=classes,
        sided=sided,
        involution_table=table,
        involution_homology=homology,
        involution_puncture=punctures,
        nontwist_homology=nontwist,
        eps_default=eps_default,
        bindings=dict(model.bindings),
        y_companion=companion,
    )


def load_chart(path: Path) -> CurveChart:
    """Loads a chart file.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    ChartParseError
        If the file does not follow the chart schema; the message names the location.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Chart file not found: {path}")
    try:
        data = srsly.read_json(path)
    except ValueError as e:
        raise ChartParseError(f"invalid JSON: {e}", str(path)) from e
    try:
        model = ChartModel.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        raise ChartParseError(error["msg"], location) from e
    return model_to_chart(model)


def dump_chart(chart: CurveChart, path: Path):
    """Writes a chart file; equal charts produce identical bytes."""
    srsly.write_json(path, chart_to_model(chart).model_dump(mode="json"), indent=2)
