from src.interfaces.orchestrator import OrchestratorProtocol
from src.interfaces.report_writer import ReportWriterProtocol
from src.interfaces.suite import SuiteRunnerProtocol

__all__ = [
    "OrchestratorProtocol",
    "ReportWriterProtocol",
    "SuiteRunnerProtocol",
]
