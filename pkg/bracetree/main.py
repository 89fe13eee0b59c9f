"""
bracetree - Main Entry Point

Loads settings from the environment (and an optional .env file),
configures logging and hands over to the click command group.
"""
import logging
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv

from bracetree.cli import cli
from bracetree.config import LOG_FORMAT, Settings
from bracetree.errors import ConfigurationError

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None):
    """Run the bracetree command line."""
    load_dotenv()

    try:
        settings = Settings.from_env()
        level = settings.logging_level()
    except ConfigurationError as e:
        logging.basicConfig(level=logging.WARNING, format=LOG_FORMAT)
        logger.error(f"{e}")
        sys.exit(2)

    # basicConfig logs to stderr; stdout carries only command output
    logging.basicConfig(level=level, format=LOG_FORMAT)
    cli.main(args=list(argv) if argv is not None else None, prog_name="bracetree", obj=settings)


if __name__ == "__main__":
    main()
