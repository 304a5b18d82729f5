# crslab/config/logger.py
"""
Centralized logging configuration
Standard output carries results, so console logging goes to standard error
"""

import logging
import sys
from pathlib import Path
from logging.handlers import RotatingFileHandler
from typing import Optional

from .constants import DEFAULT_LOG_LEVEL, LOG_FILE_BACKUPS, LOG_FILE_MAX_BYTES, SERVICE_NAME
from .structured_logging import ColoredFormatter, JSONFormatter


def setup_logging(
        log_dir: Optional[Path] = None,
        log_level: str = DEFAULT_LOG_LEVEL,
        console_output: bool = True,
        json_output: bool = False,
) -> logging.Logger:
    """
    Configure application-wide logging

    Args:
        log_dir: Directory for log files (None = console only)
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        console_output: Whether to log to standard error
        json_output: Emit one JSON object per record instead of text

    Returns:
        Root logger instance
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, log_level.upper(), logging.WARNING))
    root_logger.handlers.clear()

    text_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    if console_output:
        console_handler = logging.StreamHandler(sys.stderr)
        if json_output:
            console_handler.setFormatter(JSONFormatter(SERVICE_NAME))
        elif sys.stderr.isatty():
            console_handler.setFormatter(ColoredFormatter())
        else:
            console_handler.setFormatter(text_formatter)
        root_logger.addHandler(console_handler)

    if log_dir:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        file_formatter = JSONFormatter(SERVICE_NAME) if json_output else text_formatter

        files = ((f"{SERVICE_NAME}.log", logging.DEBUG), (f"{SERVICE_NAME}_errors.log", logging.ERROR))
        for file_name, level in files:
            handler = RotatingFileHandler(
                log_dir / file_name, maxBytes=LOG_FILE_MAX_BYTES, backupCount=LOG_FILE_BACKUPS
            )
            handler.setLevel(level)
            handler.setFormatter(file_formatter)
            root_logger.addHandler(handler)

    return root_logger


def get_logger(name: str) -> logging.Logger:
    """Module logger; handlers are configured once on the root by setup_logging"""
    return logging.getLogger(name)
