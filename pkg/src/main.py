# stdlib
import logging
import os
import sys
from typing import Optional, Sequence

# first party
from src.config import ENV_LOG_LEVEL, RunConfig
from src.logging_config import setup_logging
from src.services.orchestrator import SuiteOrchestrator

logger = logging.getLogger(__name__)

USAGE_ERROR = 2


def main(argv: Optional[Sequence[str]] = None) -> None:
    try:
        # Set up logging before anything else
        setup_logging(os.getenv(ENV_LOG_LEVEL, "INFO"))

        try:
            config = RunConfig.from_args(argv)
        except ValueError as e:
            logger.error(f"Invalid configuration: {e}")
            sys.exit(USAGE_ERROR)
        setup_logging(config.log_level.upper())

        orchestrator = SuiteOrchestrator(config)
        manifest = orchestrator.run()

        sys.exit(0 if manifest.passed else 1)
    except SystemExit:
        raise
    except Exception:
        logger.exception("Fatal error in main process")
        sys.exit(1)


if __name__ == "__main__":  # pragma: no cover
    main()
