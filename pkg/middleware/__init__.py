from .run_lifecycle import RunOutcome, run_lifecycle
