import srsly
from typer.testing import CliRunner

from crosscap.chart_io import load_chart
from crosscap.cli import app

runner = CliRunner()


def test_verify_passes(tmp_path):
    """verify exits 0 and writes a passing JSON report."""
    out = tmp_path / "report.json"
    result = runner.invoke(app, ["verify", "--g", "13", "--n", "5", "--json", str(out)])
    assert result.exit_code == 0
    assert srsly.read_json(out)["overall"] == "pass"


def test_verify_corrupted_chart_exits_one():
    """verify exits 1 when the chart is corrupted."""
    result = runner.invoke(app, ["verify", "--g", "13", "--n", "5", "--corrupt"])
    assert result.exit_code == 1


def test_verify_unsupported_params_exits_two():
    """verify exits 2 on unsupported parameters."""
    result = runner.invoke(app, ["verify", "--g", "14", "--n", "4"])
    assert result.exit_code == 2


def test_certify_then_check(tmp_path):
    """certify writes 25 certificates at (13, 5) and check accepts them."""
    out = tmp_path / "certs.json"
    result = runner.invoke(app, ["certify", "--g", "13", "--n", "5", "--out", str(out)])
    assert result.exit_code == 0
    assert srsly.read_json(out)["header"]["count"] == 25

    result = runner.invoke(app, ["check", "--certs", str(out)])
    assert result.exit_code == 0


def test_check_tampered_file_exits_one(tampered_certificates_path):
    """check exits 1 on a tampered certificate file."""
    result = runner.invoke(app, ["check", "--certs", str(tampered_certificates_path)])
    assert result.exit_code == 1


def test_check_missing_file_exits_two(tmp_path):
    """check exits 2 when the certificate file does not exist."""
    result = runner.invoke(app, ["check", "--certs", str(tmp_path / "missing.json")])
    assert result.exit_code == 2


def test_symn():
    """symn exits 0 when every n up to the bound is generated."""
    result = runner.invoke(app, ["symn", "--max", "6"])
    assert result.exit_code == 0


def test_chart_dump(odd_chart, tmp_path):
    """chart --dump writes the default chart."""
    out = tmp_path / "chart.json"
    result = runner.invoke(app, ["chart", "--g", "13", "--n", "5", "--dump", str(out)])
    assert result.exit_code == 0
    assert load_chart(out).chart_id == odd_chart.chart_id


def test_verify_with_dumped_chart(tmp_path):
    """verify accepts a chart file for matching parameters and rejects it for others."""
    out = tmp_path / "chart.json"
    runner.invoke(app, ["chart", "--g", "13", "--n", "5", "--dump", str(out)])
    assert runner.invoke(app, ["verify", "--g", "13", "--n", "5", "--chart", str(out)]).exit_code == 0
    assert runner.invoke(app, ["verify", "--g", "13", "--n", "7", "--chart", str(out)]).exit_code == 2


def test_mutate():
    """mutate exits 0 when every mutation is detected."""
    result = runner.invoke(app, ["mutate", "--g", "13", "--n", "5", "--count", "10"])
    assert result.exit_code == 0


def test_verify_chart_missing_involution_exits_two(tmp_path):
    """A chart file without one of its involutions is unreadable input."""
    out = tmp_path / "chart.json"
    runner.invoke(app, ["chart", "--g", "13", "--n", "5", "--dump", str(out)])
    data = srsly.read_json(out)
    del data["involutions"]["I"]
    srsly.write_json(out, data)
    result = runner.invoke(app, ["verify", "--g", "13", "--n", "5", "--chart", str(out)])
    assert result.exit_code == 2
    assert result.exception is None or isinstance(result.exception, SystemExit)
