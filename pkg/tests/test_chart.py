import dataclasses

from crosscap.chart import TableEntry, default_chart, puncture_reflections
from crosscap.gf2 import Gf2Matrix
from crosscap.perms import Permutation, lemma_generators
from crosscap.surface import Side, build_params
from crosscap.validation import validate_chart, validation_passed


def test_default_charts_validate(odd_chart, odd_params, even_chart, even_params):
    """The shipped charts pass every chart constraint in both modes."""
    assert validation_passed(validate_chart(odd_chart, odd_params))
    assert validation_passed(validate_chart(even_chart, even_params))


def test_shift_moves_a_curves(odd_chart):
    """R = tau sigma sends a_i to a_{i+1} in homology."""
    for i in range(1, 6):
        image = odd_chart.act(["tau", "sigma"], odd_chart.classes[f"a{i}"])
        assert image == odd_chart.classes[f"a{i + 1}"]


def test_j_sends_n1_to_e1(odd_chart):
    """J maps the bound curve n1 to e_1."""
    assert odd_chart.act(["J"], odd_chart.classes["n1"]) == odd_chart.classes["e1"]


def test_i_preserves_cut_curve(odd_chart):
    """I fixes x and x is the sum of the other boundary curves of the cut sphere."""
    classes = odd_chart.classes
    assert odd_chart.act(["I"], classes["x"]) == classes["x"]
    assert classes["x"] == classes["a6"] + classes["b3"] + classes["c3"] + classes["c4"]


def test_even_sigma_swaps_alpha_and_beta(even_chart):
    """In even mode sigma sends alpha_1 to beta_n."""
    assert even_chart.act(["sigma"], even_chart.classes["alpha1"]) == even_chart.classes["beta4"]


def test_sign_multiplies_along_operator(odd_chart):
    """tau reverses a_1, and tau sigma composes two reversing letters."""
    assert odd_chart.sign(["tau"], "a1") == -1
    assert odd_chart.sign(["tau", "sigma"], "a1") == 1


def test_name_of_prefers_family(odd_chart):
    """n1 and a4 share a class; asking for the a family returns a4."""
    assert odd_chart.name_of(odd_chart.classes["n1"], "a") == "a4"


def test_chart_id_is_stable(odd_chart, odd_params, even_chart):
    """Rebuilding a chart gives the same id and different params give a different one."""
    assert default_chart(odd_params).chart_id == odd_chart.chart_id
    assert odd_chart.chart_id != even_chart.chart_id


def test_puncture_reflections_match_lemma(odd_chart):
    """pi(sigma), pi(tau), pi(W) are the reflections of the Sym_n lemma."""
    reflections = puncture_reflections(5)
    assert (reflections["sigma"], reflections["tau"], reflections["W"]) == lemma_generators(5, "odd")
    assert odd_chart.involution_puncture["sigma"] == reflections["sigma"]


def test_chart_without_punctures(odd_params):
    """n=0 charts build without slides or e-curves."""
    chart = default_chart(build_params(13, 0))
    assert set(chart.nontwist_homology) == {"y"}
    assert not any(name.startswith("e") for name in chart.classes)


def test_wrong_companion_fails_validation(odd_chart, odd_params):
    """A y companion that misses m is flagged."""
    broken = dataclasses.replace(odd_chart, y_companion="a1")
    failed = {check.id for check in validate_chart(broken, odd_params) if not check.passed}
    assert "chart.nontwist.y.companion" in failed


def test_wrong_sidedness_fails_validation(odd_chart, odd_params):
    """Declaring a one-sided curve two-sided is flagged."""
    broken = dataclasses.replace(odd_chart, sided={**odd_chart.sided, "alpha1": Side.TWO_SIDED})
    checks = {check.id: check for check in validate_chart(broken, odd_params)}
    assert not checks["chart.sided.alpha1"].passed
    assert checks["chart.sided.alpha1"].detail == "sidedness/form mismatch"


def test_wrong_matrix_fails_validation(odd_chart, odd_params):
    """Swapping the matrices of sigma and tau breaks their table entries."""
    homology = dict(odd_chart.involution_homology)
    homology["sigma"], homology["tau"] = homology["tau"], homology["sigma"]
    broken = dataclasses.replace(odd_chart, involution_homology=homology)
    failed = {check.id for check in validate_chart(broken, odd_params) if not check.passed}
    assert "chart.fact.R.a1" in failed


def _failed(chart, params):
    return {check.id for check in validate_chart(chart, params) if not check.passed}


def test_moved_cut_curve_fails_validation(odd_chart, odd_params):
    """x must stay the sum of the other boundary curves of the cut sphere."""
    classes = {**odd_chart.classes, "x": odd_chart.classes["x"] + odd_chart.classes["a1"]}
    assert "chart.cut.x" in _failed(dataclasses.replace(odd_chart, classes=classes), odd_params)


def test_late_binding_fails_validation(odd_chart, odd_params):
    """n1 may not be bound to an e-curve, and must be bound at all."""
    assert "chart.binding.n1" in _failed(dataclasses.replace(odd_chart, bindings={"n1": "e1"}), odd_params)
    assert "chart.binding.n1" in _failed(dataclasses.replace(odd_chart, bindings={}), odd_params)


def test_non_radical_xi_fails_validation(odd_chart, odd_params):
    """Moving xi to a1 makes t_xi a non-trivial transvection that y^2 does not match."""
    classes = {**odd_chart.classes, "xi": odd_chart.classes["a1"]}
    assert "chart.nontwist.y.square" in _failed(dataclasses.replace(odd_chart, classes=classes), odd_params)


def test_non_involution_fails_validation(odd_chart, odd_params):
    """R = tau sigma has order greater than two."""
    homology = {**odd_chart.involution_homology, "sigma": odd_chart.involution_homology["tau"] @ odd_chart.involution_homology["sigma"]}
    assert "chart.involution.sigma.square" in _failed(dataclasses.replace(odd_chart, involution_homology=homology), odd_params)


def test_form_breaking_matrix_fails_validation(odd_chart, odd_params):
    """The zero matrix does not preserve the intersection form."""
    dim = odd_params.dim
    homology = {**odd_chart.involution_homology, "W": Gf2Matrix.from_strings(["0" * dim] * dim)}
    assert "chart.involution.W.form" in _failed(dataclasses.replace(odd_chart, involution_homology=homology), odd_params)


def test_wrong_permutation_fails_validation(odd_chart, odd_params):
    """sigma moves puncture classes, so it cannot carry the trivial permutation."""
    punctures = {**odd_chart.involution_puncture, "sigma": Permutation.identity(odd_params.n)}
    assert "chart.involution.sigma.delta" in _failed(dataclasses.replace(odd_chart, involution_puncture=punctures), odd_params)


def test_puncture_moving_slide_fails_validation(odd_chart, odd_params):
    """A slide must fix every puncture class."""
    nontwist = {**odd_chart.nontwist_homology, "v1": odd_chart.involution_homology["sigma"]}
    assert "chart.nontwist.v1.delta" in _failed(dataclasses.replace(odd_chart, nontwist_homology=nontwist), odd_params)


def test_flipped_sign_fails_validation(odd_chart, odd_params):
    """tau reverses a_1; a table entry claiming +1 breaks the stated action but not the image."""
    table = {**odd_chart.involution_table, ("tau", "a1"): TableEntry(image="a1", eps=1)}
    failed = _failed(dataclasses.replace(odd_chart, involution_table=table), odd_params)
    assert "chart.fact.tau.a1" in failed
    assert "chart.table.tau.a1" not in failed
