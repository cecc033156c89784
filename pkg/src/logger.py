"""Centralized logging setup for the project."""

from __future__ import annotations

import json
import logging
from datetime import datetime, timezone

from src.settings import settings

settings.load_env()


class JsonFormatter(logging.Formatter):
    """Emit one JSON object per log line."""

    def format(self, record: logging.LogRecord) -> str:  # type: ignore[override]
        message = record.getMessage()
        payload: dict[str, object] = {
            "timestamp": datetime.fromtimestamp(
                record.created, tz=timezone.utc
            ).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": message,
        }
        context = getattr(record, "context", None)
        if isinstance(context, dict):
            payload["context"] = context
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=True, default=str)


def _get_logger(name: str) -> logging.Logger:
    """Return a logger with default formatting configured once."""
    formatter = JsonFormatter()
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    log_path = settings.log_file
    if log_path is not None:
        log_path.touch(exist_ok=True)
        handlers.append(logging.FileHandler(log_path, encoding="utf-8"))
    for handler in handlers:
        handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.setLevel(settings.log_level)
    for handler in handlers:
        root_logger.addHandler(handler)

    return logging.getLogger(name)


def set_level(level: int | str) -> None:
    """Adjust the root level after startup (CLI --verbose)."""
    logging.getLogger().setLevel(level)


# Default logger for modules that prefer importing the shared instance.
logger = _get_logger("gqap")
