"""
Logging for fsing.
Records go to stderr (stdout carries reports) and are stamped with the run,
ring and channel currently being worked on.
"""

import json
import logging
import os
import sys
from contextvars import ContextVar
from datetime import datetime, timezone

# Set by the run lifecycle (run, ring) and the classification pipeline (channel)
run_id_var: ContextVar[str] = ContextVar("run_id", default="-")
ring_var: ContextVar[str] = ContextVar("ring", default="-")
channel_var: ContextVar[str] = ContextVar("channel", default="-")


def current_context() -> dict:
    return {"run_id": run_id_var.get(), "ring": ring_var.get(), "channel": channel_var.get()}


class JSONFormatter(logging.Formatter):
    """One JSON object per record."""

    def format(self, record: logging.LogRecord) -> str:
        entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            **current_context(),
            "message": record.getMessage(),
        }
        # logger.info("msg", extra={"data": {...}})
        if getattr(record, "data", None):
            entry["data"] = record.data
        if record.exc_info and record.exc_info[0] is not None:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, default=str)


class DevFormatter(logging.Formatter):
    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        color = self.COLORS.get(record.levelname, self.RESET)
        context = " ".join(f"{k}={v}" for k, v in current_context().items())
        msg = f"{color}{record.levelname:<7}{self.RESET} {record.name} [{context}] {record.getMessage()}"
        if getattr(record, "data", None):
            msg += f"  | data={record.data}"
        if record.exc_info and record.exc_info[0] is not None:
            msg += f"\n{self.formatException(record.exc_info)}"
        return msg


def setup_logging() -> None:
    """Install one stderr handler on the root logger, JSON in production."""
    env = os.getenv("ENV", "development").lower()
    level = os.getenv("LOG_LEVEL", "INFO" if env == "development" else "WARNING").upper()

    root = logging.getLogger()
    root.setLevel(level)
    # the app is invoked repeatedly in tests
    root.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(JSONFormatter() if env == "production" else DevFormatter())
    root.addHandler(handler)

    get_logger("logging").debug("Logging initialized", extra={"data": {"env": env, "level": level}})


def get_logger(name: str) -> logging.Logger:
    """Named logger under the fsing namespace."""
    return logging.getLogger(f"fsing.{name}")
