from pathlib import Path

import pytest

from crosscap.chart import CurveChart, default_chart
from crosscap.suite import VerificationReport, run_suite
from crosscap.surface import SurfaceParams, build_params


@pytest.fixture
def test_data_dir() -> Path:
    """Returns the path to the test data directory."""
    return Path(__file__).parent / "data"


@pytest.fixture
def tampered_certificates_path(test_data_dir: Path) -> Path:
    """Returns the path to a small certificate file with one tampered word."""
    return test_data_dir / "certificates_tampered.json"


@pytest.fixture(scope="session")
def odd_params() -> SurfaceParams:
    """Returns the parameters for g=13, n=5."""
    return build_params(13, 5)


@pytest.fixture(scope="session")
def even_params() -> SurfaceParams:
    """Returns the parameters for g=16, n=4."""
    return build_params(16, 4)


@pytest.fixture(scope="session")
def odd_chart(odd_params: SurfaceParams) -> CurveChart:
    """Returns the default chart for g=13, n=5."""
    return default_chart(odd_params)


@pytest.fixture(scope="session")
def even_chart(even_params: SurfaceParams) -> CurveChart:
    """Returns the default chart for g=16, n=4."""
    return default_chart(even_params)


@pytest.fixture(scope="session")
def odd_report(odd_chart: CurveChart) -> VerificationReport:
    """Returns the verification report for g=13, n=5 on the default chart."""
    return run_suite(13, 5, odd_chart)
