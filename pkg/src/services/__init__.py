from src.services.orchestrator import SuiteOrchestrator
from src.services.report_writer import ReportWriter

__all__ = ["ReportWriter", "SuiteOrchestrator"]
