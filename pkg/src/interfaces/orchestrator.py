# stdlib
from typing import TYPE_CHECKING, Dict, Protocol, runtime_checkable

# first party
from src.interfaces.suite import SuiteRunnerProtocol

if TYPE_CHECKING:  # pragma: no cover
    from src.models.reports import RunManifest, SuiteResult


@runtime_checkable
class OrchestratorProtocol(SuiteRunnerProtocol, Protocol):
    """Protocol defining the interface for verification run orchestrators."""

    def setup(self) -> None:
        """Prepare the output directory."""
        ...

    def write_reports(self, results: Dict[str, "SuiteResult"]) -> Dict[str, str]:
        """Write every suite report and return artifact hashes by file name."""
        ...

    def run(self) -> "RunManifest":
        """Run the requested suites and write the manifest."""
        ...
