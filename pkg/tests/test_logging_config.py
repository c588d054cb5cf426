# stdlib
import logging

# first party
from src.logging_config import DEFAULT_LOGGING_CONFIG, StructuredFormatter, setup_logging


def _record(**extra) -> logging.LogRecord:
    record = logging.LogRecord("src.test", logging.INFO, __file__, 1, "Suite finished", (), None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_formatter_without_extra():
    """Test plain records are formatted unchanged."""
    formatter = StructuredFormatter("%(message)s")
    assert formatter.format(_record()) == "Suite finished"


def test_formatter_appends_sorted_extra():
    """Test extra fields are appended as sorted JSON."""
    formatter = StructuredFormatter("%(message)s")
    line = formatter.format(_record(suite="relations", n=2))
    assert line == 'Suite finished - extra: {"n": 2, "suite": "relations"}'


def test_setup_logging_sets_level():
    """Test setup_logging applies the level without mutating the defaults."""
    try:
        setup_logging("DEBUG")
        assert logging.getLogger("src").level == logging.DEBUG
        assert DEFAULT_LOGGING_CONFIG["loggers"]["src"]["level"] == "INFO"
    finally:
        logger = logging.getLogger("src")
        logger.handlers.clear()
        logger.propagate = True
        logger.setLevel(logging.NOTSET)
