# stdlib
import pathlib
from typing import TYPE_CHECKING, Protocol, runtime_checkable

if TYPE_CHECKING:  # pragma: no cover
    from src.models.reports import RunManifest, SuiteResult


@runtime_checkable
class ReportWriterProtocol(Protocol):
    """Protocol defining the interface for report writers."""

    def write_suite(self, result: "SuiteResult") -> pathlib.Path:
        """Write one suite report and return its path."""
        ...

    def write_manifest(self, manifest: "RunManifest") -> pathlib.Path:
        """Write the run manifest and return its path."""
        ...
