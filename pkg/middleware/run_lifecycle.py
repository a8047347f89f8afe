"""
Run lifecycle for command line invocations.
Generates run IDs, populates context variables, logs start/finish with duration
and maps errors onto process exit codes.
"""

import time
import uuid
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Optional

from constants import ExitCodes
from exceptions import FsingError
from logging_config import get_logger, ring_var, run_id_var

logger = get_logger("lifecycle")


@dataclass
class RunOutcome:
    run_id: str
    exit_code: int = ExitCodes.OK
    error: Optional[str] = None


@contextmanager
def run_lifecycle(command: str, target: str = "-"):
    """Errors escaping the block are logged and recorded on the outcome, never re-raised."""
    outcome = RunOutcome(uuid.uuid4().hex[:8])
    run_token = run_id_var.set(outcome.run_id)
    ring_token = ring_var.set(target)
    start_time = time.perf_counter()

    logger.info(f"→ {command} {target}")
    try:
        yield outcome
        duration_ms = round((time.perf_counter() - start_time) * 1000, 1)
        logger.info(
            f"← {command} {target} exit={outcome.exit_code} ({duration_ms}ms)",
            extra={"data": {"exit_code": outcome.exit_code, "duration_ms": duration_ms}},
        )
    except FsingError as exc:
        duration_ms = round((time.perf_counter() - start_time) * 1000, 1)
        outcome.exit_code = exc.exit_code
        outcome.error = exc.detail
        logger.warning(
            f"✖ {command} {target} {type(exc).__name__} ({duration_ms}ms): {exc.detail}",
            extra={"data": {"duration_ms": duration_ms, "error": exc.detail}},
        )
    except Exception as exc:
        duration_ms = round((time.perf_counter() - start_time) * 1000, 1)
        outcome.exit_code = ExitCodes.USAGE
        outcome.error = f"internal error: {exc}"
        logger.error(
            f"✖ {command} {target} UNHANDLED ERROR ({duration_ms}ms): {exc}",
            exc_info=True,
            extra={"data": {"duration_ms": duration_ms, "error": str(exc)}},
        )
    finally:
        ring_var.reset(ring_token)
        run_id_var.reset(run_token)
