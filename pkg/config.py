import os
from dotenv import load_dotenv

# Load .env file
load_dotenv()


def _int_list(raw: str) -> list[int]:
    return [int(part) for part in raw.replace(" ", "").split(",") if part]


class Config:
    # --- Environment ---
    ENV = os.getenv("ENV", "development")  # "development", "production" or "testing"

    # --- Groebner kernel ---
    # Hard cap on pair reductions; runaway computations become a resource error
    GB_MAX_PAIRS = int(os.getenv("FSING_GB_MAX_PAIRS", "200000"))
    GB_CACHE_SIZE = int(os.getenv("FSING_GB_CACHE_SIZE", "512"))

    # --- Frobenius closure ---
    EMAX = int(os.getenv("FSING_EMAX", "3"))
    # Largest q * (max generator degree) a closure level may reach
    FROBENIUS_MAX_DEGREE = int(os.getenv("FSING_FROBENIUS_MAX_DEGREE", "32"))
    CLOSURE_EXTRA_DEGREES = int(os.getenv("FSING_CLOSURE_EXTRA_DEGREES", "2"))

    # --- Sampling budgets ---
    SAMPLES = int(os.getenv("FSING_SAMPLES", "10"))
    SOP_MAX_DEGREE = int(os.getenv("FSING_SOP_MAX_DEGREE", "3"))
    SOP_MAX_TRIES = int(os.getenv("FSING_SOP_MAX_TRIES", "60"))
    DEEP_SCHEDULE = _int_list(os.getenv("FSING_DEEP_SCHEDULE", "2,3,4"))

    # --- Multiplicity / presentations ---
    TMAX = int(os.getenv("FSING_TMAX", "12"))
    DEGREE_CAP = int(os.getenv("FSING_DEGREE_CAP", "60"))

    # --- Fan-out ---
    WORKERS = int(os.getenv("FSING_WORKERS", "4"))

config = Config()
