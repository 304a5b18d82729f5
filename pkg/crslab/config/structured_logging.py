"""
Structured logging with JSON support

Formatters used by ``setup_logging`` and a logger wrapper that carries
key-value context (seeds, sample counts, stream ids) onto each record.
"""

from __future__ import annotations

import json
import logging
from datetime import datetime, timezone
from typing import Any, Dict, Mapping, Optional

from .constants import SERVICE_NAME

# Attributes every LogRecord has; anything else arrived through ``extra``
_RECORD_ATTRS = frozenset(vars(logging.LogRecord('', 0, '', 0, '', (), None))) | {'message', 'asctime'}


def record_context(record: logging.LogRecord) -> Dict[str, Any]:
    """Context fields attached to a record"""
    return {k: v for k, v in vars(record).items() if k not in _RECORD_ATTRS and not k.startswith('_')}


class JSONFormatter(logging.Formatter):
    """One JSON object per record

    Context passed through ``extra`` lands under "extra"; exceptions are
    split into type, message and traceback.
    """

    def __init__(
            self, service_name: str = SERVICE_NAME, environment: str = "cli", include_extra: bool = True
    ):
        super().__init__()
        self.service_name = service_name
        self.environment = environment
        self.include_extra = include_extra

    def format(self, record: logging.LogRecord) -> str:
        document: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "service": self.service_name,
            "environment": self.environment,
            "source": {"file": record.pathname, "line": record.lineno, "function": record.funcName},
        }
        if record.exc_info:
            kind, value, _ = record.exc_info
            document["exception"] = {
                "type": kind.__name__ if kind else None,
                "message": str(value) if value else None,
                "traceback": self.formatException(record.exc_info),
            }
        if self.include_extra:
            context = record_context(record)
            if context:
                document["extra"] = context
        return json.dumps(document, default=str)


class ColoredFormatter(logging.Formatter):
    """Compact colored lines for a terminal on standard error

    ``[LEVEL] logger: message key=value ...``; warnings and worse also
    show the source location.
    """

    COLORS = {
        'DEBUG': '\033[36m',
        'INFO': '\033[32m',
        'WARNING': '\033[33m',
        'ERROR': '\033[31m',
        'CRITICAL': '\033[35m',
    }
    DIM = '\033[2m'
    RESET = '\033[0m'

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname, '')
        line = f"{color}[{record.levelname}]{self.RESET} {record.name}: {record.getMessage()}"
        context = record_context(record)
        if context:
            line += f" {self.DIM}" + " ".join(f"{k}={v}" for k, v in context.items()) + self.RESET
        if record.levelno >= logging.WARNING:
            line += f" {self.DIM}({record.pathname}:{record.lineno}){self.RESET}"
        if record.exc_info:
            line += "\n" + self.formatException(record.exc_info)
        return line


class StructuredLogger:
    """Logger taking context as keyword arguments

    ``bind`` returns a logger that adds its context to every call, e.g.
    ``logger.bind(seed=7).info("stream finished", stream=2)``.
    """

    def __init__(self, name: str, context: Optional[Mapping[str, Any]] = None):
        self.logger = logging.getLogger(name)
        self.context: Dict[str, Any] = dict(context or {})

    def bind(self, **context: Any) -> StructuredLogger:
        return StructuredLogger(self.logger.name, {**self.context, **context})

    def _log(self, level: int, message: str, context: Dict[str, Any], exc_info: bool = False) -> None:
        if self.logger.isEnabledFor(level):
            self.logger.log(level, message, extra={**self.context, **context}, exc_info=exc_info)

    def debug(self, message: str, **context: Any) -> None:
        self._log(logging.DEBUG, message, context)

    def info(self, message: str, **context: Any) -> None:
        self._log(logging.INFO, message, context)

    def warning(self, message: str, **context: Any) -> None:
        self._log(logging.WARNING, message, context)

    def error(self, message: str, **context: Any) -> None:
        self._log(logging.ERROR, message, context)

    def exception(self, message: str, **context: Any) -> None:
        self._log(logging.ERROR, message, context, exc_info=True)


def get_structured_logger(name: str) -> StructuredLogger:
    return StructuredLogger(name)
