import sys

from crosscap.certify import certify_all
from crosscap.chart import default_chart
from crosscap.config import (
    ACCEPTANCE_CONFIGS,
    CERTIFICATES_JSON_NAME,
    DATA_DIR,
    REPORT_JSON_NAME,
    REPORT_MD_PATH,
    SYMN_MAX,
)
from crosscap.logging import console
from crosscap.report import display_report, generate_report, save_report_to_markdown
from crosscap.suite import run_suite, symn_sweep, write_report
from crosscap.surface import build_params


def verify_configs(configs=ACCEPTANCE_CONFIGS):
    """Verifies each (g, n), writing its certificates and report to DATA_DIR."""
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    reports = []
    for g, n in configs:
        chart = default_chart(build_params(g, n))
        certify_all(g, n, DATA_DIR / CERTIFICATES_JSON_NAME.format(g=g, n=n), chart)
        report = run_suite(g, n, chart)
        write_report(report, DATA_DIR / REPORT_JSON_NAME.format(g=g, n=n))
        reports.append(report)
    return reports


def main():
    """Main entry point for the verification pipeline."""
    try:
        console.log("Starting the verification pipeline...")

        console.log(f"Step 1: Verifying {len(ACCEPTANCE_CONFIGS)} configurations...")
        reports = verify_configs()

        console.log(f"Step 2: Sweeping the Sym_n lemmas up to n={SYMN_MAX}...")
        sweep = symn_sweep(SYMN_MAX)

        console.log("Step 3: Writing the summary report...")
        summary = generate_report(reports)
        display_report(summary, sweep)
        save_report_to_markdown(summary, REPORT_MD_PATH, sweep)

        failed = [report for report in reports if not report.passed]
        if failed:
            names = ", ".join(f"({r.params['g']}, {r.params['n']})" for r in failed)
            console.log(f"Verification failed for {names}", style="bold red")
            sys.exit(1)
        console.log("Pipeline finished successfully.", style="bold green")
    except Exception as e:
        console.log(
            f"An error occurred during the pipeline execution: {e}", style="bold red"
        )
        sys.exit(1)


if __name__ == "__main__":
    main()
