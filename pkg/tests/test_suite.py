import dataclasses

import pytest
import srsly

from crosscap.certify import certify_all, certify_targets, write_certificates
from crosscap.config import ACCEPTANCE_CONFIGS
from crosscap.errors import UnsupportedParamsError
from crosscap.mutations import corrupt_chart
from crosscap.suite import check_certificates, run_suite, symn_sweep


def test_odd_suite_passes(odd_report):
    """(13, 5) passes with the eight-involution census."""
    assert odd_report.overall == "pass"
    assert odd_report.counts.failed == 0
    assert set(odd_report.census.symbols) == {"sigma", "tau", "I", "J", "W", "rho1", "rho2", "rho3"}
    assert odd_report.census.size == 8


def test_even_suite_passes(even_chart):
    """(16, 4) passes with eleven involutions."""
    report = run_suite(16, 4, even_chart)
    assert report.overall == "pass"
    assert report.census.size == 11
    assert report.generation.generated


def test_report_pi_block(odd_report):
    """The pi block records the images of sigma, tau, W and order 5!."""
    assert odd_report.pi.surjective
    assert odd_report.pi.order == odd_report.pi.expected == 120
    assert odd_report.pi.images["sigma"] == "(1 5)(2 4)"
    assert odd_report.pi.images["W"] == "(2 4)"


def test_checks_are_sorted_and_unique(odd_report):
    """Check ids are unique and listed in canonical order."""
    ids = [check.id for check in odd_report.checks]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))


def test_every_check_has_an_anchor(odd_report):
    """Each check names a stated identity or is marked plumbing."""
    assert all(check.anchor for check in odd_report.checks)


def test_one_check_per_index(odd_report):
    """Each transported index is its own check."""
    ids = {check.id for check in odd_report.checks}
    assert {f"lemma.R2.a{i}" for i in range(2, 7)} <= ids
    assert {f"lemma.R9.v{j}" for j in range(2, 6)} <= ids
    assert "lemma.y.square" in ids
    assert "cert.t[e4]" in ids
    assert "exact.y" in ids


def test_definitional_checks_counted_separately(odd_report):
    """Seed identities are definitional and excluded from the substantive count."""
    checks = {check.id: check for check in odd_report.checks}
    assert checks["lemma.R1.a1"].definitional
    assert checks["cert.t[a1]"].definitional
    assert not checks["cert.t[c4]"].definitional
    assert not checks["involution.rho1"].definitional
    assert odd_report.counts.definitional_total > 0
    assert odd_report.counts.substantive_pass == odd_report.counts.substantive_total


def test_report_is_deterministic(odd_chart, odd_report):
    """Two runs with different pool sizes give the same payload."""
    again = run_suite(13, 5, odd_chart, workers=1)
    assert again.deterministic_payload() == odd_report.deterministic_payload()


def test_corrupted_chart_fails(odd_chart):
    """Redirecting one table entry fails the suite."""
    report = run_suite(13, 5, corrupt_chart(odd_chart))
    assert report.overall == "fail"
    failed = {check.id for check in report.failures()}
    assert "chart.table.tau.a1" in failed


def test_unsupported_params_raise():
    """Unsupported parameters raise rather than producing a failing report."""
    with pytest.raises(UnsupportedParamsError):
        run_suite(12, 5)


def test_zero_punctures_skip_puncture_checks():
    """n=0 passes, skips puncture checks and reports the unused symbols."""
    report = run_suite(13, 0)
    assert report.overall == "pass"
    verdicts = {check.id: check.verdict for check in report.checks}
    assert verdicts["involution.rho2"] == "skipped (n=0)"
    assert verdicts["pi.surjective"] == "skipped (n=0)"
    assert report.census.unused == ["J", "rho2"]


def test_certificate_file_checks_pass(odd_chart, odd_params, tmp_path):
    """Certificates written by the certifier re-check cleanly."""
    path = tmp_path / "certs.json"
    write_certificates(certify_targets(odd_chart), odd_params, path)
    report = check_certificates(path)
    assert report.overall == "pass"
    verdicts = {check.id: check.verdict for check in report.checks}
    assert verdicts["certfile.count"] == "pass"
    assert verdicts["certfile.coverage"] == "pass"


def test_tampered_certificate_fails(tampered_certificates_path):
    """The tampered word fails while the intact ones pass."""
    report = check_certificates(tampered_certificates_path)
    verdicts = {check.id: check.verdict for check in report.checks}
    assert verdicts["cert.t[a2]"] == "fail"
    assert verdicts["cert.t[a1]"] == "pass"
    assert verdicts["cert.v[1]"] == "pass"
    assert verdicts["cert.y"] == "pass"
    assert verdicts["certfile.coverage"] == "fail"
    assert report.overall == "fail"


def test_symn_sweep():
    """Both generator triples give Sym_n up to n=8 and the closure oracle agrees."""
    table = symn_sweep(8, oracle_max=6)
    assert table.height == 8
    assert table["lemma_generated"].all()
    assert table["pi_generated"].all()
    assert table.filter(table["n"] <= 6)["oracle_agrees"].all()
    assert table.filter(table["n"] > 6)["oracle_agrees"].null_count() == 2


def test_symn_sweep_rejects_empty_range():
    """max_n below 1 is rejected."""
    with pytest.raises(ValueError):
        symn_sweep(0)


@pytest.mark.parametrize("g,n", ACCEPTANCE_CONFIGS)
def test_acceptance_configurations_pass(g, n):
    """Every configuration the pipeline verifies passes with the full census."""
    report = run_suite(g, n)
    assert report.overall == "pass"
    assert report.counts.failed == 0
    assert report.counts.substantive_pass == report.counts.substantive_total
    assert report.census.size == (8 if g % 2 else 11)
    assert report.generation.generated


def test_twist_letter_is_not_a_certificate(odd_chart, tmp_path):
    """A word that only repeats its own target evaluates correctly but is not made of involutions."""
    path = tmp_path / "certs.json"
    certify_all(13, 5, path, odd_chart)
    data = srsly.read_json(path)
    entry = next(cert for cert in data["certificates"] if cert["target"] == "t[a3]")
    entry["word"] = ["t[a3]"]
    srsly.write_json(path, data)

    report = check_certificates(path, odd_chart)
    checks = {check.id: check for check in report.checks}
    assert checks["cert.t[a3]"].verdict == "pass"
    assert checks["alphabet.t[a3]"].verdict == "fail"
    assert "t[a3]" in checks["alphabet.t[a3]"].detail
    assert checks["alphabet.t[a2]"].verdict == "pass"
    assert not report.generation.pure_covered
    assert report.overall == "fail"


def test_chart_without_an_involution_fails_as_data(odd_chart):
    """Dropping I from an in-memory chart yields failing checks rather than an exception."""
    broken = dataclasses.replace(
        odd_chart,
        involution_homology={name: m for name, m in odd_chart.involution_homology.items() if name != "I"},
        involution_puncture={name: p for name, p in odd_chart.involution_puncture.items() if name != "I"},
        eps_default={name: e for name, e in odd_chart.eps_default.items() if name != "I"},
    )
    report = run_suite(13, 5, broken)
    checks = {check.id: check for check in report.checks}
    assert report.overall == "fail"
    assert checks["chart.involutions.declared"].verdict == "fail"
    assert checks["lemma.R3.c4"].verdict == "fail"
    assert "not declared" in checks["lemma.R3.c4"].detail


def test_census_is_a_named_check(odd_report):
    """The census verdict is listed among the checks with the number of symbols used."""
    check = next(check for check in odd_report.checks if check.id == "census.alphabet")
    assert check.verdict == "pass"
    assert check.detail == "8 used"


def test_census_relaxed_without_punctures():
    """At n=0 the census check says it only requires a subset and names what is not needed."""
    report = run_suite(13, 0)
    check = next(check for check in report.checks if check.id == "census.alphabet")
    assert check.verdict == "pass"
    assert "subset" in check.description
    assert check.detail == "6 used; not needed: J, rho2"
