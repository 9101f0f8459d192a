from pathlib import Path
from typing import Optional

import polars as pl
import typer

from crosscap.certify import certify_all, expected_certificate_count
from crosscap.chart import default_chart
from crosscap.chart_io import dump_chart, load_chart
from crosscap.config import MUTATION_COUNT, MUTATION_SEED, ORACLE_MAX, SYMN_MAX
from crosscap.errors import CertificateFileError, ChartError, CrosscapError, UnsupportedParamsError
from crosscap.logging import console
from crosscap.mutations import corrupt_chart, mutation_sweep
from crosscap.report import display_verification, generate_report, save_report_to_markdown
from crosscap.suite import check_certificates, run_suite, symn_sweep, write_report
from crosscap.surface import build_params

EXIT_FAIL = 1
EXIT_UNSUPPORTED = 2

app = typer.Typer(help="Certify that punctured non-orientable mapping class groups are generated by involutions.")


def _abort(message: str, code: int = EXIT_UNSUPPORTED):
    console.log(message, style="red")
    raise typer.Exit(code)


def _finish(report, json_out: Optional[Path], markdown: Optional[Path]):
    display_verification(report)
    if json_out is not None:
        write_report(report, json_out)
        console.print(f"\n[dim]Report saved to {json_out}[/dim]")
    if markdown is not None:
        save_report_to_markdown(generate_report([report]), markdown)
        console.print(f"[dim]Markdown saved to {markdown}[/dim]")
    raise typer.Exit(0 if report.passed else EXIT_FAIL)


@app.command()
def verify(
    g: int = typer.Option(..., "--g", help="Genus, at least 13."),
    n: int = typer.Option(..., "--n", help="Number of punctures."),
    chart: Optional[Path] = typer.Option(None, "--chart", help="Chart JSON; the default chart if omitted."),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the JSON report here."),
    markdown: Optional[Path] = typer.Option(None, "--markdown", help="Write a markdown summary here."),
    corrupt: bool = typer.Option(False, "--corrupt", help="Redirect one table entry before verifying."),
):
    """Runs the full check suite for (g, n)."""
    try:
        p = build_params(g, n)
        active = load_chart(chart) if chart else default_chart(p)
        if corrupt:
            active = corrupt_chart(active)
        report = run_suite(g, n, active)
    except (UnsupportedParamsError, ChartError, FileNotFoundError) as e:
        _abort(str(e))
    _finish(report, json_out, markdown)


@app.command()
def certify(
    g: int = typer.Option(..., "--g"),
    n: int = typer.Option(..., "--n"),
    out: Path = typer.Option(..., "--out", help="Certificate file to write."),
):
    """Writes a certificate for every required generator."""
    try:
        certs = certify_all(g, n, out)
    except CrosscapError as e:
        _abort(str(e))
    p = build_params(g, n)
    console.log(f"Wrote {len(certs)} certificates to {out} (expected {expected_certificate_count(p)})", style="green")


@app.command()
def check(
    certs: Path = typer.Option(..., "--certs", help="Certificate file to re-evaluate."),
    chart: Optional[Path] = typer.Option(None, "--chart"),
    json_out: Optional[Path] = typer.Option(None, "--json"),
):
    """Re-evaluates a certificate file in both representations."""
    try:
        report = check_certificates(certs, chart)
    except (CertificateFileError, UnsupportedParamsError, ChartError, FileNotFoundError) as e:
        _abort(str(e))
    _finish(report, json_out, None)


@app.command()
def symn(
    max_n: int = typer.Option(SYMN_MAX, "--max", help="Largest n to sweep."),
    oracle_max: int = typer.Option(ORACLE_MAX, "--oracle-max", help="Cross-check by closure up to this n."),
):
    """Checks which reflection triples generate Sym_n."""
    try:
        table = symn_sweep(max_n, oracle_max)
    except ValueError as e:
        _abort(str(e))
    console.print(table)
    generated = table["lemma_generated"].all() and table["pi_generated"].all()
    agrees = table["oracle_agrees"].drop_nulls().all()
    raise typer.Exit(0 if generated and agrees else EXIT_FAIL)


@app.command("chart")
def chart_command(
    g: int = typer.Option(..., "--g"),
    n: int = typer.Option(..., "--n"),
    dump: Path = typer.Option(..., "--dump", help="Where to write the chart JSON."),
):
    """Dumps the default chart for (g, n)."""
    try:
        active = default_chart(build_params(g, n))
    except CrosscapError as e:
        _abort(str(e))
    dump_chart(active, dump)
    console.log(f"Wrote chart {active.chart_id} to {dump}", style="green")


@app.command()
def mutate(
    g: int = typer.Option(..., "--g"),
    n: int = typer.Option(..., "--n"),
    count: int = typer.Option(MUTATION_COUNT, "--count"),
    seed: int = typer.Option(MUTATION_SEED, "--seed"),
):
    """Mutates certificates at random and reports how many the evaluator catches."""
    try:
        active = default_chart(build_params(g, n))
    except CrosscapError as e:
        _abort(str(e))
    table, rate = mutation_sweep(active, count, seed)
    console.print(table.group_by("kind").agg(pl.col("detected").sum(), pl.len().alias("total")).sort("kind"))
    raise typer.Exit(0 if rate == 1.0 else EXIT_FAIL)


def main():
    app()


if __name__ == "__main__":
    main()
