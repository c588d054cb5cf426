# stdlib
import csv
import io
import json
import logging
import pathlib
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Sequence

# first party
from src.interfaces.report_writer import ReportWriterProtocol
from src.models.reports import DecompositionReport, RunManifest, SuiteResult

logger = logging.getLogger(__name__)

TABLE_HEADER = ("weight", "dim", "sl_n label", "primitive?", "notes")
CSV_HEADER = ("suite", "n", "ell", "status", "summary", "weight", "dim", "label", "primitive", "notes")


def to_json(data: Dict[str, Any]) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _align(rows: Sequence[Sequence[str]]) -> List[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return [" | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def table(report: DecompositionReport) -> str:
    """Aligned text table of a decomposition: weight | dim | label | primitive? | notes."""
    rows: List[Sequence[str]] = [TABLE_HEADER]
    if report.is_empty:
        rows.append(("-", "0", "-", "-", "empty (expected for ℓ > −n)"))
    for w in report.weights:
        rows.append(
            (
                str(w.weight),
                str(w.dimension),
                w.label or "?",
                "yes" if w.primitive else "no",
                "; ".join(w.notes),
            )
        )
    lines = _align(rows)
    lines.insert(1, "-" * max(len(line) for line in lines))
    title = f"{report.kind} n={report.rank} ell={report.twist}"
    footer = f"irreducible={str(bool(report.irreducible)).lower()}"
    if report.generator is not None:
        footer += f" generator=Q^{report.generator}"
    if report.lift_status is not None:
        footer += f" lift={report.lift_status.value}"
    return "\n".join([title, *lines, footer]) + "\n"


def _decompositions(details: Dict[str, Any]) -> Iterator[DecompositionReport]:
    for value in details.values():
        if isinstance(value, DecompositionReport):
            yield value


@dataclass
class ReportWriter(ReportWriterProtocol):
    """Writes ``<out>/<suite>.<fmt>`` files and ``<out>/manifest.json``."""

    output_dir: pathlib.Path
    fmt: str = "json"

    def render(self, result: SuiteResult) -> str:
        if self.fmt == "json":
            return to_json(result.to_dict())
        if self.fmt == "csv":
            return self._render_csv(result)
        return self._render_text(result)

    def _render_csv(self, result: SuiteResult) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for case in result.cases:
            base = [result.name, result.rank, "" if case.twist is None else case.twist, case.status.value, case.summary]
            decompositions = list(_decompositions(case.details))
            if not decompositions:
                writer.writerow(base + ["", "", "", "", ""])
            for report in decompositions:
                for w in report.weights:
                    writer.writerow(
                        base
                        + [w.weight, w.dimension, w.label or "", str(w.primitive).lower(), "; ".join(w.notes)]
                    )
        return buffer.getvalue()

    def _render_text(self, result: SuiteResult) -> str:
        status = "PASS" if result.passed else "FAIL"
        lines = [f"suite {result.name} (n={result.rank}): {status}"]
        if result.error:
            lines.append(f"  error: {result.error}")
        for case in result.cases:
            ell = "-" if case.twist is None else str(case.twist)
            lines.append(f"  ell={ell}: {case.status.value} - {case.summary}")
            for report in _decompositions(case.details):
                lines.extend("    " + line for line in table(report).splitlines())
        return "\n".join(lines) + "\n"

    def write_suite(self, result: SuiteResult) -> pathlib.Path:
        path = self.output_dir / f"{result.name}.{self.fmt}"
        path.write_text(self.render(result), encoding="utf-8")
        logger.info("Wrote report", extra={"suite": result.name, "path": str(path)})
        return path

    def write_manifest(self, manifest: RunManifest) -> pathlib.Path:
        path = self.output_dir / "manifest.json"
        path.write_text(to_json(manifest.to_dict()), encoding="utf-8")
        logger.info("Wrote manifest", extra={"path": str(path), "passed": manifest.passed})
        return path
