# stdlib
from unittest.mock import MagicMock

# third party
import pytest

# first party
from src.config import RunConfig
from src.interfaces.report_writer import ReportWriterProtocol
from src.models.realization import Realization
from src.services.lie_realization import build_realization


@pytest.fixture
def run_config(tmp_path) -> RunConfig:
    """Create a small configuration writing into a temporary directory."""
    return RunConfig(
        n=2,
        ells=[-2],
        suites=["weyl-orbit"],
        output_dir=str(tmp_path / "reports"),
    )


@pytest.fixture
def realization2() -> Realization:
    """The rank-2 realization at twist 0."""
    return build_realization(2, 0)


@pytest.fixture
def realization3() -> Realization:
    """The rank-3 realization at twist 0."""
    return build_realization(3, 0)


@pytest.fixture
def mock_writer(tmp_path) -> ReportWriterProtocol:
    """Create a mock report writer that returns real, hashable files."""
    writer = MagicMock(spec=ReportWriterProtocol)

    def write_suite(result):
        path = tmp_path / f"{result.name}.json"
        path.write_text(result.name)
        return path

    writer.write_suite.side_effect = write_suite
    writer.write_manifest.return_value = tmp_path / "manifest.json"
    return writer
