# Bernstein Gap Verifier Configuration
import os

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.getenv(f"BGAP_{name}")
    return int(value) if value not in (None, "") else default


def _env_float(name: str, default: float) -> float:
    value = os.getenv(f"BGAP_{name}")
    return float(value) if value not in (None, "") else default


# CLI limits (the library itself is uncapped)
MAX_CLI_N = _env_int("MAX_CLI_N", 64)
DEFAULT_GRID = _env_int("DEFAULT_GRID", 10)

# Randomized identity trials
DEFAULT_SEED = _env_int("DEFAULT_SEED", 0)
DEFAULT_TRIALS = _env_int("DEFAULT_TRIALS", 100)
IDENTITY_SAMPLE_BOUND = _env_int("IDENTITY_SAMPLE_BOUND", 100)  # samples drawn from [-B, B]
IDENTITY_DENOMINATOR_MAX = _env_int("IDENTITY_DENOMINATOR_MAX", 1000)

# Float mode
FLOAT_TOLERANCE = _env_float("FLOAT_TOLERANCE", 1e-10)

# Scan execution
SCAN_WORKERS = _env_int("SCAN_WORKERS", 1)

LOG_LEVEL = os.getenv("BGAP_LOG_LEVEL", "WARNING")
