"""The curve chart: homology classes of named curves and the actions of the reflection involutions.

The default chart lays the handle crosscaps mu_1..mu_{2r} out in r blocks
{mu_{2b-1}, mu_{2b}}. The reflections sigma and tau reverse the block order
(sigma about block 1/2 + r/2, tau fixing block 1) and the position inside
each block, so R = tau sigma shifts every block by one. The remaining
crosscaps carry alpha_i, m (and beta_i in even mode).
"""

import hashlib
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import srsly

from crosscap.errors import ChartConsistencyError, UnboundCurveError
from crosscap.gf2 import Gf2Matrix, Gf2Vector, IntersectionForm, mat_compose, slide_matrix, transvection
from crosscap.perms import Permutation
from crosscap.surface import (
    CurveId,
    Side,
    SurfaceParams,
    auxiliary_curves,
    lambda_curves,
    one_sided_curves,
)

CHART_INVOLUTIONS = ("sigma", "tau", "I", "J", "W")
EVEN_ONLY_INVOLUTIONS = ("K",)


def chart_involutions(p: SurfaceParams) -> Tuple[str, ...]:
    return CHART_INVOLUTIONS + (EVEN_ONLY_INVOLUTIONS if p.is_even else ())


@dataclass(frozen=True)
class TableEntry:
    """The image of a curve under an involution and the orientation sign of f t_c f^-1 = t_{f(c)}^eps."""

    image: Union[str, Gf2Vector]
    eps: int = -1


@dataclass(frozen=True)
class ActionFact:
    """A stated action of a word in chart involutions on a named curve.

    ``operator`` lists involution names left to right, so the last one acts first.
    ``eps`` is the orientation sign the statement forces, if it forces one.
    """

    id: str
    operator: Tuple[str, ...]
    source: str
    image: str
    anchor: str
    eps: Optional[int] = None


@dataclass
class CurveChart:
    """Design data for one (g, n): curve classes, involution actions and non-twist generators."""

    params: SurfaceParams
    classes: Dict[str, Gf2Vector]
    sided: Dict[str, Side]
    involution_table: Dict[Tuple[str, str], TableEntry]
    involution_homology: Dict[str, Gf2Matrix]
    involution_puncture: Dict[str, Permutation]
    nontwist_homology: Dict[str, Gf2Matrix]
    eps_default: Dict[str, int]
    bindings: Dict[str, str]
    y_companion: str
    _chart_id: Optional[str] = field(default=None, init=False, repr=False, compare=False)

    @property
    def form(self) -> IntersectionForm:
        return IntersectionForm.standard(self.params.g, self.params.n)

    @property
    def chart_id(self) -> str:
        """Content hash of the serialized chart; memo tables key on it."""
        if self._chart_id is None:
            from crosscap.chart_io import chart_to_model

            payload = srsly.json_dumps(chart_to_model(self).model_dump(mode="json"), sort_keys=True)
            self._chart_id = hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]
        return self._chart_id

    def class_of(self, curve: str) -> Gf2Vector:
        if curve not in self.classes:
            raise UnboundCurveError(f"curve {curve} is not in the chart")
        return self.classes[curve]

    def image_class(self, entry: TableEntry) -> Gf2Vector:
        return entry.image if isinstance(entry.image, Gf2Vector) else self.class_of(entry.image)

    def act(self, operator: Sequence[str], vector: Gf2Vector) -> Gf2Vector:
        """Applies a word in chart involutions to a class, rightmost letter first."""
        for name in reversed(operator):
            vector = self.involution(name).apply(vector)
        return vector

    def involution(self, name: str) -> Gf2Matrix:
        if name not in self.involution_homology:
            raise ChartConsistencyError(f"involution {name} is not declared by the chart")
        return self.involution_homology[name]

    def name_of(self, vector: Gf2Vector, family: Optional[str] = None) -> Optional[str]:
        """A curve with the given class, preferring ``family``."""
        matches = [name for name, value in self.classes.items() if value == vector]
        if family is not None:
            preferred = [name for name in matches if CurveId.parse(name).family == family]
            if preferred:
                return preferred[0]
        return matches[0] if matches else None

    def sign(self, operator: Sequence[str], curve: str) -> int:
        """The orientation sign of ``operator`` on ``curve``.

        Letters are applied right to left; table entries give the sign of a
        letter on a named curve, otherwise the letter's default sign is used.
        """
        eps = 1
        name: Optional[str] = curve
        vector = self.class_of(curve)
        for letter in reversed(operator):
            matrix = self.involution(letter)
            entry = self.involution_table.get((letter, name)) if name else None
            eps *= entry.eps if entry else self.eps_default[letter]
            family = CurveId.parse(name).family if name else None
            vector = matrix.apply(vector)
            if entry and isinstance(entry.image, str):
                name = entry.image
            else:
                name = self.name_of(vector, family)
        return eps


def delta(p: SurfaceParams, i: int) -> Gf2Vector:
    """The class of the i-th puncture; delta_n is the sum of the others."""
    if p.n < 2:
        return Gf2Vector.zeros(p.dim)
    if i == p.n:
        return Gf2Vector.from_support(p.dim, range(p.g, p.dim))
    return Gf2Vector.from_support(p.dim, [p.g + i - 1])


def crosscaps(p: SurfaceParams, *indices: int) -> Gf2Vector:
    """Sum of the 1-based crosscap classes mu_j."""
    return Gf2Vector.from_support(p.dim, [j - 1 for j in indices])


def stated_actions(p: SurfaceParams) -> List[ActionFact]:
    """Every curve action the construction of the involutions states."""
    k, r, n = p.k, p.r, p.n
    facts = [
        ActionFact("tau.a1", ("tau",), "a1", "a1", "tau t_{a_1} tau = t_{a_1}^{-1}", eps=-1),
        ActionFact(f"I.a{k + 3}", ("I",), f"a{k + 3}", f"c{k + 1}", "t_{c_{k+1}} = I t_{a_{k+3}}^{-1} I", eps=-1),
        ActionFact(f"I.c{k}", ("I",), f"c{k}", f"b{k}", "t_{b_k} = I t_{c_k}^{-1} I", eps=-1),
        ActionFact("I.b1", ("I",), "b1", "d1", "t_{d_1} = I t_{b_1}^{-1} I", eps=-1),
        ActionFact("I.b2", ("I",), "b2", "d2", "t_{d_2} = I t_{b_2}^{-1} I", eps=-1),
        ActionFact("I.x", ("I",), "x", "x", "I preserves the cut a_{k+3} u b_k u c_k u c_{k+1} u x"),
        ActionFact("W.m", ("W",), "m", "m", "W fixes m and reverses its orientation", eps=-1),
        ActionFact("W.companion", ("W",), "companion", "companion", "W fixes a and reverses its orientation", eps=-1),
    ]
    if n >= 2:
        facts.append(ActionFact("J.n1", ("J",), "n1", "e1", "J(n_1) = e_1", eps=-1))
    if n >= 1:
        if p.is_even:
            facts.append(ActionFact("K.alpha1", ("K",), "alpha1", "alpha1", "K v_1 K = v_1^{-1}", eps=-1))
            facts.append(ActionFact("sigma.alpha1", ("sigma",), "alpha1", f"beta{n}", "sigma(alpha_1) = beta_n"))
        else:
            facts.append(ActionFact("tau.alpha1", ("tau",), "alpha1", "alpha1", "tau v_1 tau = v_1^{-1}", eps=-1))
    if p.is_even:
        facts.append(ActionFact(f"J.b{r + 1}", ("J",), f"b{r + 1}", f"b{r + 1}", "rho_4 = J t_{b_{r+1}} is an involution", eps=-1))
        facts.append(ActionFact(f"J.c{r}", ("J",), f"c{r}", f"c{r}", "rho_5 = J t_{c_r} is an involution", eps=-1))

    shift = ("tau", "sigma")
    facts += [ActionFact(f"R.a{i}", shift, f"a{i}", f"a{i + 1}", "R(a_i) = a_{i+1}") for i in range(1, r)]
    facts += [ActionFact(f"R.b{i}", shift, f"b{i}", f"b{i + 1}", "R(b_i) = b_{i+1}") for i in range(1, r)]
    facts += [ActionFact(f"R.c{i}", shift, f"c{i}", f"c{i + 1}", "R(c_i) = c_{i+1}") for i in range(1, r - 1)]
    facts += [
        ActionFact(f"R.alpha{i}", shift, f"alpha{i}", f"alpha{i + 1}", "S(alpha_i) = alpha_{i+1}" if p.is_even else "R(alpha_i) = alpha_{i+1}")
        for i in range(1, n)
    ]
    if p.is_even:
        facts += [
            ActionFact(f"R'.beta{i}", ("sigma", "tau"), f"beta{i}", f"beta{i - 1}", "R(beta_i) = beta_{i-1}")
            for i in range(n, 1, -1)
        ]
    facts += [ActionFact(f"T.e{i}", ("J", "I"), f"e{i}", f"e{i + 1}", "T(e_i) = e_{i+1}") for i in range(1, n - 1)]
    return facts


def resolve_fact_curve(chart: CurveChart, name: str) -> str:
    return chart.y_companion if name == "companion" else name


def _handle_reflection(p: SurfaceParams, pivot: int) -> Dict[int, int]:
    """Block b goes to block pivot - b (mod r) with positions swapped."""
    mapping = {}
    for block in range(1, p.r + 1):
        target = (pivot - block - 1) % p.r + 1
        for position in (1, 2):
            mapping[2 * block - 2 + position] = 2 * target - 2 + (3 - position)
    return mapping


def _swaps(*pairs: Tuple[int, int]) -> Dict[int, int]:
    mapping = {}
    for left, right in pairs:
        mapping[left], mapping[right] = right, left
    return mapping


def _puncture_reflection(n: int, pivot: int) -> Permutation:
    """i -> pivot - i read cyclically in 1..n."""
    return Permutation([(pivot - i - 1) % n + 1 for i in range(1, n + 1)])


def _puncture_mirror(n: int) -> Permutation:
    """i -> n + 1 - i on 2..n-1, fixing 1 and n."""
    return Permutation([i if i in (1, n) else n + 1 - i for i in range(1, n + 1)])


def puncture_reflections(n: int) -> Dict[str, Permutation]:
    """Puncture permutations of sigma, tau and W on n punctures."""
    return {
        "sigma": _puncture_reflection(n, n + 1),
        "tau": _puncture_reflection(n, n + 2),
        "W": _puncture_mirror(n),
    }


def puncture_actions(p: SurfaceParams) -> Dict[str, Permutation]:
    n = p.n
    actions = puncture_reflections(n)
    actions["I"] = _puncture_reflection(n, n + 1)
    actions["J"] = _puncture_reflection(n, n + 2)
    if p.is_even:
        actions["K"] = _puncture_reflection(n, n + 2)
    return {name: actions[name] for name in chart_involutions(p)}


def _involution_matrix(p: SurfaceParams, crosscap_map: Dict[int, int], punctures: Permutation) -> Gf2Matrix:
    """The block matrix permuting crosscaps by ``crosscap_map`` and punctures by ``punctures``."""
    columns = [crosscaps(p, crosscap_map.get(j, j)) for j in range(1, p.g + 1)]
    columns += [delta(p, punctures(i)) for i in range(1, p.n)]
    return Gf2Matrix.from_columns(columns)


def _curve_classes(p: SurfaceParams) -> Dict[str, Gf2Vector]:
    k, r, g = p.k, p.r, p.g

    def wrap(j: int) -> int:
        return (j - 1) % (2 * r) + 1

    classes = {f"a{i}": crosscaps(p, 2 * i - 1, 2 * i) for i in range(1, r + 1)}
    classes.update({f"b{i}": crosscaps(p, 2 * i, wrap(2 * i + 1)) for i in range(1, r + 1)})
    if p.is_even:
        classes[f"b{r + 1}"] = crosscaps(p, 2 * r - 1, g)
    classes.update({f"c{i}": crosscaps(p, wrap(2 * i + 1), wrap(2 * i + 4)) for i in range(1, r)})
    if p.is_even:
        classes[f"c{r}"] = crosscaps(p, 2 * r, p.alpha_crosscap)
    classes["d1"] = crosscaps(p, 2, g)
    classes["d2"] = crosscaps(p, 1, 4)
    classes.update({f"d{i}": crosscaps(p, 2 * i, g) for i in range(3, r + 1)})
    seam = classes[f"a{k + 1}"]
    for i in range(1, p.n):
        seam = seam + delta(p, i)
        classes[f"e{i}"] = seam
    classes.update({f"alpha{i}": crosscaps(p, p.alpha_crosscap) for i in range(1, p.n + 1)})
    if p.is_even:
        classes.update({f"beta{i}": crosscaps(p, g) for i in range(1, p.n + 1)})
    classes["xi"] = Gf2Vector.zeros(p.dim)
    classes["m"] = crosscaps(p, p.alpha_crosscap)
    classes["x"] = crosscaps(p, 2 * k, 2 * k + 3, 2 * k + 4, 2 * k + 5)
    classes["n1"] = classes[f"a{k + 1}"]
    return classes


def _involutions(p: SurfaceParams, form: IntersectionForm) -> Dict[str, Gf2Matrix]:
    k, g = p.k, p.g
    punctures = puncture_actions(p)
    extra = _swaps((2 * p.r + 1, g)) if p.is_even else {}
    matrices = {
        "sigma": _involution_matrix(p, {**_handle_reflection(p, 1), **extra}, punctures["sigma"]),
        "tau": _involution_matrix(p, {**_handle_reflection(p, 2), **extra}, punctures["tau"]),
        "I": _involution_matrix(
            p, _swaps((2 * k, 2 * k + 4), (2 * k + 3, 2 * k + 5), (3, g), (1, 5)), punctures["I"]
        ),
        "W": _involution_matrix(p, _swaps((1, 4), (2, 3)), punctures["W"]),
    }
    # J also drags the first puncture across the crosscap mu_{2k+1}, so J(a_{k+1}) = e_1
    mirror = _involution_matrix(p, _swaps((1, 3), (2, 4)), punctures["J"])
    matrices["J"] = mat_compose(mirror, slide_matrix(form, crosscaps(p, 2 * k + 1), delta(p, 1)))
    if p.is_even:
        matrices["K"] = _involution_matrix(p, _swaps((5, 7), (6, 8)), punctures["K"])
    return {name: matrices[name] for name in chart_involutions(p)}


def _nontwist(p: SurfaceParams, form: IntersectionForm, classes: Dict[str, Gf2Vector], companion: str) -> Dict[str, Gf2Matrix]:
    nontwist = {"y": transvection(form, classes[companion])}
    for i in range(1, p.n + 1):
        nontwist[f"v{i}"] = slide_matrix(form, classes[f"alpha{i}"], delta(p, i))
    if p.is_even:
        for i in range(1, p.n + 1):
            nontwist[f"w{i}"] = slide_matrix(form, classes[f"beta{i}"], delta(p, i))
    return nontwist


def default_chart(p: SurfaceParams) -> CurveChart:
    """Builds the shipped chart for ``p`` and checks that it validates.

    Raises
    ------
    ChartConsistencyError
        If any chart constraint fails.
    """
    from crosscap.validation import validate_chart

    form = IntersectionForm.standard(p.g, p.n)
    classes = _curve_classes(p)
    one_sided = set(one_sided_curves(p))
    sided = {name: Side.ONE_SIDED if name in one_sided else Side.TWO_SIDED for name in classes}
    companion = f"c{p.r}" if p.is_even else f"d{p.r}"
    bindings = {"n1": f"a{p.k + 1}"}

    table: Dict[Tuple[str, str], TableEntry] = {}
    for fact in stated_actions(p):
        if len(fact.operator) != 1:
            continue
        source = companion if fact.source == "companion" else fact.source
        image = companion if fact.image == "companion" else fact.image
        table[(fact.operator[0], source)] = TableEntry(image=image, eps=-1)

    chart = CurveChart(
        params=p,
        classes={name: classes[name] for name in lambda_curves(p) + auxiliary_curves(p)},
        sided=sided,
        involution_table=table,
        involution_homology=_involutions(p, form),
        involution_puncture=puncture_actions(p),
        nontwist_homology=_nontwist(p, form, classes, companion),
        eps_default={name: -1 for name in chart_involutions(p)},
        bindings=bindings,
        y_companion=companion,
    )
    failures = [check for check in validate_chart(chart, p) if not check.passed]
    if failures:
        raise ChartConsistencyError(
            "default chart failed: " + ", ".join(f"{check.id} ({check.detail})" for check in failures)
        )
    return chart
