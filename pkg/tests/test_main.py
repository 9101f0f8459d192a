from unittest.mock import MagicMock, patch

import pytest

from crosscap.main import main, verify_configs


@patch("crosscap.main.save_report_to_markdown")
@patch("crosscap.main.display_report")
@patch("crosscap.main.generate_report")
@patch("crosscap.main.symn_sweep")
@patch("crosscap.main.verify_configs")
def test_main(mock_verify_configs, mock_symn_sweep, mock_generate_report, mock_display_report, mock_save_report):
    """Test that the main function calls the pipeline steps in the correct order."""
    mock_verify_configs.return_value = [MagicMock(passed=True)]

    main()

    mock_verify_configs.assert_called_once()
    mock_symn_sweep.assert_called_once()
    mock_generate_report.assert_called_once_with(mock_verify_configs.return_value)
    mock_display_report.assert_called_once()
    mock_save_report.assert_called_once()


@patch("crosscap.main.save_report_to_markdown")
@patch("crosscap.main.display_report")
@patch("crosscap.main.generate_report")
@patch("crosscap.main.symn_sweep")
@patch("crosscap.main.verify_configs")
def test_main_exits_on_failing_config(
    mock_verify_configs, mock_symn_sweep, mock_generate_report, mock_display_report, mock_save_report
):
    """Test that a failing configuration makes the pipeline exit with status 1."""
    mock_verify_configs.return_value = [MagicMock(passed=False, params={"g": 13, "n": 5})]

    with pytest.raises(SystemExit) as excinfo:
        main()

    assert excinfo.value.code == 1
    mock_save_report.assert_called_once()


def test_verify_configs_writes_files(tmp_path):
    """Test that each configuration leaves a certificate file and a report in the data directory."""
    with patch("crosscap.main.DATA_DIR", tmp_path):
        reports = verify_configs(((13, 5),))

    assert reports[0].passed
    assert (tmp_path / "certificates_g13_n5.json").exists()
    assert (tmp_path / "report_g13_n5.json").exists()
