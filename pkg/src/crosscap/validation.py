from dataclasses import dataclass
from typing import Callable, List

from crosscap.chart import CurveChart, chart_involutions, delta, resolve_fact_curve, stated_actions
from crosscap.errors import CrosscapError
from crosscap.gf2 import Gf2Matrix, pairing, preserves_form, transvection
from crosscap.perms import Permutation
from crosscap.surface import Side, SurfaceParams, auxiliary_curves, lambda_curves, lambda_prime, one_sided_curves


@dataclass(frozen=True)
class ChartCheck:
    """Outcome of one chart constraint."""

    id: str
    description: str
    anchor: str
    passed: bool
    detail: str = ""


def delta_consistent(matrix: Gf2Matrix, perm: Permutation, p: SurfaceParams) -> bool:
    """True iff the matrix sends each puncture class delta_i to delta_{perm(i)}."""
    if perm.n != p.n:
        return False
    return all(matrix.apply(delta(p, i)) == delta(p, perm(i)) for i in range(1, p.n))


def _guarded(check_id: str, description: str, anchor: str, predicate: Callable[[], bool], detail: str) -> ChartCheck:
    try:
        passed = bool(predicate())
    except (CrosscapError, KeyError, ValueError) as e:
        return ChartCheck(check_id, description, anchor, False, f"{type(e).__name__}: {e}")
    return ChartCheck(check_id, description, anchor, passed, "" if passed else detail)


def validate_chart(chart: CurveChart, p: SurfaceParams) -> List[ChartCheck]:
    """Checks a chart against every stated action and structural constraint.

    Parameters
    ----------
    chart : CurveChart
        The chart to check.
    p : SurfaceParams
        The parameters the chart is meant for.

    Returns
    -------
    List[ChartCheck]
        One entry per constraint; failures are data, never exceptions.
    """
    form = chart.form
    checks: List[ChartCheck] = []

    required = lambda_curves(p) + auxiliary_curves(p)
    missing = [name for name in required if name not in chart.classes]
    checks.append(
        ChartCheck(
            "chart.curves.complete",
            "every curve of Lambda and every auxiliary curve has a class",
            "plumbing",
            not missing and chart.params == p,
            f"missing {', '.join(missing)}" if missing else ("" if chart.params == p else "params differ"),
        )
    )

    one_sided = set(one_sided_curves(p))
    for name in required:
        if name not in chart.classes:
            continue
        expected = Side.ONE_SIDED if name in one_sided else Side.TWO_SIDED
        checks.append(
            _guarded(
                f"chart.sided.{name}",
                f"{name} is {expected.value} and its self-pairing agrees",
                "plumbing",
                lambda name=name, expected=expected: chart.sided.get(name) == expected
                and pairing(form, chart.classes[name], chart.classes[name]) == (expected is Side.ONE_SIDED),
                "sidedness/form mismatch",
            )
        )

    expected_involutions = set(chart_involutions(p))
    checks.append(
        ChartCheck(
            "chart.involutions.declared",
            "the chart declares exactly the reflection involutions of the mode",
            "plumbing",
            set(chart.involution_homology) == expected_involutions == set(chart.involution_puncture),
            f"declared {sorted(chart.involution_homology)}",
        )
    )

    for name in sorted(expected_involutions & set(chart.involution_homology)):
        matrix = chart.involution_homology[name]
        perm = chart.involution_puncture.get(name)
        checks.append(
            _guarded(
                f"chart.involution.{name}.square",
                f"{name} squares to the identity in homology",
                "plumbing",
                lambda matrix=matrix: (matrix @ matrix).is_identity(),
                "square is not the identity",
            )
        )
        checks.append(
            _guarded(
                f"chart.involution.{name}.form",
                f"{name} preserves the intersection form",
                "plumbing",
                lambda matrix=matrix: preserves_form(matrix, form),
                "form not preserved",
            )
        )
        checks.append(
            _guarded(
                f"chart.involution.{name}.delta",
                f"{name} moves puncture classes as its permutation dictates",
                "plumbing",
                lambda matrix=matrix, perm=perm: perm is not None and (perm * perm).is_identity() and delta_consistent(matrix, perm, p),
                "delta-inconsistent",
            )
        )

    identity = Permutation.identity(p.n)
    for name, matrix in chart.nontwist_homology.items():
        checks.append(
            _guarded(
                f"chart.nontwist.{name}.form",
                f"{name} preserves the intersection form",
                "plumbing",
                lambda matrix=matrix: preserves_form(matrix, form),
                "form not preserved",
            )
        )
        checks.append(
            _guarded(
                f"chart.nontwist.{name}.delta",
                f"{name} fixes every puncture class",
                "1 -> PN -> N -> Sym_n -> 1",
                lambda matrix=matrix: delta_consistent(matrix, identity, p),
                "delta-inconsistent",
            )
        )
    checks.append(
        _guarded(
            "chart.nontwist.y.square",
            "y^2 is the twist along xi",
            "y^2 is the Dehn twist along xi",
            lambda: chart.nontwist_homology["y"] @ chart.nontwist_homology["y"] == transvection(form, chart.classes["xi"]),
            "y^2 differs from t_xi",
        )
    )
    checks.append(
        _guarded(
            "chart.nontwist.y.companion",
            "the companion of y is two-sided and meets m once",
            "Y_{m,a}",
            lambda: chart.sided[chart.y_companion] is Side.TWO_SIDED
            and pairing(form, chart.classes["m"], chart.classes[chart.y_companion]) == 1,
            "companion must be two-sided and meet m once",
        )
    )

    for (name, curve), entry in chart.involution_table.items():
        checks.append(
            _guarded(
                f"chart.table.{name}.{curve}",
                f"{name} maps {curve} to the tabulated image",
                "t_{f(a)}^eps = f t_a f^{-1}",
                lambda name=name, curve=curve, entry=entry: entry.eps in (1, -1)
                and chart.involution_homology[name].apply(chart.classes[curve]) == chart.image_class(entry),
                "matrix disagrees with the table",
            )
        )

    for fact in stated_actions(p):
        checks.append(
            _guarded(
                f"chart.fact.{fact.id}",
                f"{' '.join(fact.operator)} maps {fact.source} to {fact.image}",
                fact.anchor,
                lambda fact=fact: _fact_holds(chart, fact),
                "stated action fails",
            )
        )

    k = p.k
    checks.append(
        _guarded(
            "chart.cut.x",
            "x bounds a sphere with a_{k+3}, b_k, c_k, c_{k+1}",
            "cut along a_{k+3} u b_k u c_k u c_{k+1} u x",
            lambda: chart.classes["x"]
            == chart.classes[f"a{k + 3}"] + chart.classes[f"b{k}"] + chart.classes[f"c{k}"] + chart.classes[f"c{k + 1}"],
            "x is not the sum of the other boundary curves",
        )
    )

    bound = chart.bindings.get("n1")
    checks.append(
        _guarded(
            "chart.binding.n1",
            f"n1 is bound to a curve of the reduced set ({bound})",
            "J(n_1) = e_1",
            lambda: bound in lambda_prime(p) and not bound.startswith("e") and chart.classes[bound] == chart.classes["n1"],
            "n1 unbound or bound to a curve certified too late",
        )
    )
    return checks


def _fact_holds(chart: CurveChart, fact) -> bool:
    source = resolve_fact_curve(chart, fact.source)
    image = resolve_fact_curve(chart, fact.image)
    if chart.act(fact.operator, chart.classes[source]) != chart.classes[image]:
        return False
    if len(fact.operator) > 1:
        return True
    entry = chart.involution_table.get((fact.operator[0], source))
    if entry is None or chart.image_class(entry) != chart.classes[image]:
        return False
    return fact.eps is None or entry.eps == fact.eps


def validation_passed(checks: List[ChartCheck]) -> bool:
    return all(check.passed for check in checks)
