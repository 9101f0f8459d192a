import pytest

from crosscap.errors import UnsupportedParamsError
from crosscap.surface import (
    CurveId,
    Parity,
    build_params,
    expected_alphabet_size,
    lambda_curves,
    lambda_prime,
    one_sided_curves,
)


def test_odd_params():
    """g=13 gives odd mode with r=6, k=3 and homology dimension 17 for n=5."""
    p = build_params(13, 5)
    assert p.parity is Parity.ODD
    assert (p.r, p.k, p.l) == (6, 3, 2)
    assert p.dim == 17
    assert p.alpha_crosscap == 13


def test_odd_params_with_odd_r():
    """g=15 is accepted with k = floor(r/2)."""
    p = build_params(15, 5)
    assert (p.r, p.k) == (7, 3)


def test_even_params():
    """g=16 gives even mode with r=7, k=3."""
    p = build_params(16, 4)
    assert p.parity is Parity.EVEN
    assert (p.r, p.k, p.l) == (7, 3, 2)
    assert p.alpha_crosscap == 15


@pytest.mark.parametrize(
    "g, n, message",
    [
        (11, 3, "at least 13"),
        (13, 4, "odd puncture count"),
        (14, 4, "r odd"),
        (16, 5, "even puncture count"),
        (13, -1, "non-negative"),
    ],
)
def test_unsupported_params(g, n, message):
    """Unsupported (g, n) raise UnsupportedParamsError naming the constraint."""
    with pytest.raises(UnsupportedParamsError, match=message):
        build_params(g, n)


def test_zero_punctures_allowed():
    """n=0 is accepted in both modes and has no l."""
    assert build_params(13, 0).l is None
    assert build_params(16, 0).dim == 16


def test_lambda_prime_size():
    """At g=13, n=5 the reduced set has 6 + 2 + 5 + 2 + 4 = 19 curves."""
    p = build_params(13, 5)
    assert len(lambda_prime(p)) == 19
    assert set(lambda_prime(p)) <= set(lambda_curves(p))


def test_even_lambda_includes_extra_curves():
    """Even mode adds b_{r+1} and c_r."""
    p = build_params(16, 4)
    assert "b8" in lambda_prime(p)
    assert "c7" in lambda_prime(p)
    assert expected_alphabet_size(p) == 11


def test_one_sided_curves():
    """alpha, beta and m curves are one-sided."""
    assert one_sided_curves(build_params(16, 2)) == ["alpha1", "alpha2", "beta1", "beta2", "m"]


def test_curve_id_parse():
    """Indexed and single curve names parse and print back."""
    assert CurveId.parse("alpha12") == CurveId("alpha", 12)
    assert str(CurveId.parse("xi")) == "xi"
    with pytest.raises(ValueError):
        CurveId.parse("z3")
