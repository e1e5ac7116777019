"""Logging configuration for the verification engine."""

import logging
import sys

from loguru import logger

CLI_FORMAT = "<level>{level: <8}</level> | <level>{message}</level>"


class InterceptHandler(logging.Handler):
    """Intercept standard logging messages toward loguru."""

    def emit(self, record):
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Find caller from where the logged message originated
        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def setup_logging(log_level: str, log_format: str = CLI_FORMAT) -> None:
    """Configure loguru on stderr and route stdlib logging through it.

    Args:
        log_level: Log level to use (from settings or the ``--log-level`` option).
        log_format: loguru format string; the compact CLI format by default.
    """
    log_level = log_level.upper()

    logger.remove()
    logger.add(sys.stderr, level=log_level, format=log_format, colorize=True)
    logger.debug("Log level set to: {}", log_level)

    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)

    # Map loguru's TRACE to Python logging's DEBUG (standard logging doesn't have TRACE)
    stdlib_log_level = "DEBUG" if log_level == "TRACE" else log_level
    for name in ("dunkl_dirac", "concurrent.futures"):
        logging.getLogger(name).setLevel(stdlib_log_level)

    # numpy and scipy emit warnings through the warnings module; keep them at WARNING
    logging.captureWarnings(True)
    logging.getLogger("py.warnings").setLevel("WARNING")
