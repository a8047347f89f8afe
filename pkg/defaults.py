"""
Default sampling budget for classification runs.
Command line flags override individual entries per run.
"""

from config import config

DEFAULT_BUDGET = {
    "seed": 0,
    "samples": config.SAMPLES,
    "e_max": config.EMAX,
    "deep_schedule": list(config.DEEP_SCHEDULE),
    "sop_max_degree": config.SOP_MAX_DEGREE,
    "sop_max_tries": config.SOP_MAX_TRIES,
    "t_max": config.TMAX,
    "s_max": 4,
    "unmixed_k": [2, 3],
}
