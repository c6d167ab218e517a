import logging

from rich.console import Console
from rich.logging import RichHandler

from tools.settings import get_settings


def configure_logging(level: str | int | None = None) -> None:
    """Rich log lines on stderr; stdout is reserved for results and JSON reports."""
    level = level or get_settings().log_level
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=False, show_path=False)],
        force=True,
    )
