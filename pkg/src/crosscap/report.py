import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional

import polars as pl
import srsly

from crosscap.config import DATA_DIR, REPORT_MD_PATH
from crosscap.logging import console
from crosscap.suite import VerificationReport


def load_reports(data_dir: Path = DATA_DIR) -> List[VerificationReport]:
    """Loads every saved verification report.

    Parameters
    ----------
    data_dir : Path
        Directory holding the ``report_g*_n*.json`` files.

    Returns
    -------
    List[VerificationReport]
        The reports, ordered by genus and puncture count.

    Raises
    ------
    FileNotFoundError
        If no report files are found.
    """
    paths = sorted(Path(data_dir).glob("report_g*_n*.json"))
    if not paths:
        raise FileNotFoundError(
            f"No verification reports found in {data_dir}. Please run `crosscap-pipeline` first."
        )
    reports = [VerificationReport.model_validate(srsly.read_json(path)) for path in paths]
    return sorted(reports, key=lambda report: (report.params["g"], report.params["n"]))


def checks_frame(report: VerificationReport) -> pl.DataFrame:
    """One row per check, with its category (the id up to the first dot)."""
    return pl.DataFrame(
        [check.model_dump() for check in report.checks],
        schema_overrides={"definitional": pl.Boolean},
    ).with_columns(pl.col("id").str.split(".").list.first().alias("category"))


def category_counts(report: VerificationReport) -> pl.DataFrame:
    """Pass, fail and skip counts per check category."""
    return (
        checks_frame(report)
        .group_by("category")
        .agg(
            (pl.col("verdict") == "pass").sum().alias("pass"),
            (pl.col("verdict") == "fail").sum().alias("fail"),
            pl.col("verdict").str.starts_with("skipped").sum().alias("skipped"),
        )
        .sort("category")
    )


def generate_report(reports: List[VerificationReport]) -> pl.DataFrame:
    """Summarizes reports into one row per configuration.

    Parameters
    ----------
    reports : List[VerificationReport]
        Reports to summarize.

    Returns
    -------
    pl.DataFrame
        Columns g, n, parity, census, substantive, definitional, skipped,
        failed, pi_order and overall.
    """
    rows = [
        {
            "g": report.params["g"],
            "n": report.params["n"],
            "parity": report.params["parity"],
            "census": report.census.size,
            "substantive": f"{report.counts.substantive_pass}/{report.counts.substantive_total}",
            "definitional": f"{report.counts.definitional_pass}/{report.counts.definitional_total}",
            "skipped": report.counts.skipped,
            "failed": report.counts.failed,
            "pi_order": report.pi.order,
            "overall": report.overall,
        }
        for report in reports
    ]
    return pl.DataFrame(rows)


def display_verification(report: VerificationReport):
    """Prints one verification report: headline, category counts and any failures."""
    params = report.params
    console.print(f"\n[bold blue]Verification of N_{{{params['g']},{params['n']}}} ({params['parity']} mode)[/bold blue]")
    console.print(f"Chart: {report.chart} ({report.chart_id})")
    console.print(category_counts(report))

    census = report.census
    console.print(f"\n[bold green]Census[/bold green]: {', '.join(census.symbols)} ({census.size} of {census.expected})")
    if census.unused:
        console.print(f"[yellow]Not needed at n={params['n']}: {', '.join(census.unused)}[/yellow]")
    console.print(f"pi images: {report.pi.images}; order {report.pi.order} of {report.pi.expected}")

    failures = report.failures()
    if failures:
        console.print(f"\n[bold red]{len(failures)} failing checks[/bold red]")
        for check in failures:
            console.print(f"  {check.id}: {check.description} [dim]({check.detail})[/dim]")
    style = "bold green" if report.passed else "bold red"
    console.print(f"\n[{style}]Overall: {report.overall}[/{style}]")


def display_report(summary: pl.DataFrame, sweep: Optional[pl.DataFrame] = None):
    """Displays the batch summary.

    Parameters
    ----------
    summary : pl.DataFrame
        Output of :func:`generate_report`.
    sweep : pl.DataFrame, optional
        Output of :func:`crosscap.suite.symn_sweep`.
    """
    console.print("\n[bold blue]Involution Generation Report[/bold blue]")
    console.print(f"Configurations verified: {summary.height}")
    console.print(summary)
    passing = summary.filter(pl.col("overall") == "pass").height
    console.print(f"\n[bold green]Passing configurations[/bold green]: {passing}/{summary.height}")
    if sweep is not None:
        console.print("\n[bold green]Sym_n sweep[/bold green]")
        console.print(sweep)


def _markdown_table(df: pl.DataFrame) -> str:
    header = "| " + " | ".join(df.columns) + " |"
    rule = "|" + "|".join("---" for _ in df.columns) + "|"
    body = ["| " + " | ".join(str(value) for value in row) + " |" for row in df.iter_rows()]
    return "\n".join([header, rule, *body])


def save_report_to_markdown(summary: pl.DataFrame, output_path: Path, sweep: Optional[pl.DataFrame] = None):
    """Saves the batch summary to a markdown file.

    Parameters
    ----------
    summary : pl.DataFrame
        Output of :func:`generate_report`.
    output_path : Path
        Path where the markdown file should be saved.
    sweep : pl.DataFrame, optional
        Sym_n sweep table to append.
    """
    current_time = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S UTC")
    passing = summary.filter(pl.col("overall") == "pass").height
    sweep_section = f"\n## Sym_n Sweep\n\n{_markdown_table(sweep)}\n" if sweep is not None else ""

    markdown_content = f"""# Involution Generation Report

*Last updated: {current_time}*

## Summary

**Configurations verified:** {summary.height}

**Passing configurations:** {passing}

## Configurations

{_markdown_table(summary)}
{sweep_section}
---

*This report was generated automatically by the crosscap verification pipeline.*
"""

    with open(output_path, "w", encoding="utf-8") as f:
        f.write(markdown_content)


def main():
    """Main entry point for the script."""
    summary = generate_report(load_reports())
    display_report(summary)

    save_report_to_markdown(summary, REPORT_MD_PATH)
    console.print(f"\n[dim]Report saved to {REPORT_MD_PATH}[/dim]")


if __name__ == "__main__":
    try:
        main()
    except FileNotFoundError as e:
        console.log(str(e), style="red")
        sys.exit(1)
