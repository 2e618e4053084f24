"""structlog setup. Log lines go to stderr so stdout carries only command output."""

import logging
import sys

import structlog

from packages.core.utils.config import Settings, get_settings


def configure_logging(settings: Settings | None = None) -> None:
    """Configure structlog from settings.

    Args:
        settings: Settings to read ``log_level`` and ``log_format`` from.
            Defaults to the cached application settings.
    """
    settings = settings or get_settings()
    # getLevelNamesMapping() is 3.11+; on 3.10 read the same table it copies.
    level_names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))()
    level = level_names.get(settings.log_level.upper(), logging.WARNING)

    renderer: structlog.typing.Processor
    if settings.log_format == "json":
        renderer = structlog.processors.JSONRenderer(sort_keys=True)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
