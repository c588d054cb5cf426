# stdlib
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional

# first party
from src.config import RunConfig
from src.interfaces.orchestrator import OrchestratorProtocol
from src.models.reports import RunManifest, SuiteResult
from src.services.report_writer import ReportWriter
from src.services.suites import get_suite
from src.utils import sha256_file

logger = logging.getLogger(__name__)


@dataclass
class SuiteOrchestrator(OrchestratorProtocol):
    """
    Runs the requested verification suites and persists their reports.

    A failing or crashing suite is recorded in the manifest and the run
    carries on with the next one.

    Attributes:
        config: Run configuration
        writer: Report writer; built from the config when not provided
    """

    config: RunConfig
    writer: Optional[ReportWriter] = None

    def __post_init__(self) -> None:
        if self.writer is None:
            self.writer = ReportWriter(self.config.output_path, self.config.format)
        self._timing: Dict[str, float] = {}

    def setup(self) -> None:
        self.config.output_path.mkdir(parents=True, exist_ok=True)

    def run_suite(self, name: str) -> SuiteResult:
        start = time.perf_counter()
        try:
            result = get_suite(name)(self.config)
        except Exception as e:
            logger.error(f"Error during suite {name}: {e}")
            result = SuiteResult(name=name, rank=self.config.n, error=f"{type(e).__name__}: {e}")
        self._timing[name] = round(time.perf_counter() - start, 3)
        logger.info(
            "Suite finished",
            extra={"suite": name, "n": self.config.n, "passed": result.passed},
        )
        return result

    def run_suites(self) -> Dict[str, SuiteResult]:
        names: List[str] = list(self.config.suites)
        if self.config.workers > 1 and len(names) > 1:
            with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
                results = list(pool.map(self.run_suite, names))
        else:
            results = [self.run_suite(name) for name in names]
        return dict(zip(names, results))

    def write_reports(self, results: Dict[str, SuiteResult]) -> Dict[str, str]:
        artifacts: Dict[str, str] = {}
        for result in results.values():
            path = self.writer.write_suite(result)
            artifacts[path.name] = sha256_file(path)
        return artifacts

    def run(self) -> RunManifest:
        """
        Run the whole verification.

        Returns:
            RunManifest: Config echo, per-suite verdicts and artifact hashes
        """
        self.setup()
        results = self.run_suites()
        manifest = RunManifest(
            config=self.config.echo(),
            suites={name: result.passed for name, result in results.items()},
            artifacts=self.write_reports(results),
            timing=dict(self._timing) if self.config.record_timing else None,
        )
        self.writer.write_manifest(manifest)
        logger.info(
            "Run finished",
            extra={"suites": len(results), "passed": manifest.passed},
        )
        return manifest
