# stdlib
from typing import TYPE_CHECKING, Protocol, runtime_checkable

if TYPE_CHECKING:  # pragma: no cover
    from src.models.reports import SuiteResult


@runtime_checkable
class SuiteRunnerProtocol(Protocol):
    """Protocol for anything that can run one named verification suite."""

    def run_suite(self, name: str) -> "SuiteResult":
        """Run a suite against the configured rank and twists."""
        ...
