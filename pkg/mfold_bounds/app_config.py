"""
mfold_bounds.app_config - Environment configuration and error reporting
"""

# stdlib
from os import environ

# library
import rollbar


OUTPUT_DIR = environ.get("MFOLD_OUTPUT_DIR", ".")
WORKERS = int(environ.get("MFOLD_WORKERS", "1"))
ENV = environ.get("MFOLD_ENV", "development")

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 100_000
# Truncation index K; working order is mK+1
DEFAULT_TRUNCATION = 4
DEFAULT_RADII = (0.5, 0.9, 0.99)
ANGLES_PER_SECTOR = 256
SAMPLE_BLOCK = 4096


def init_rollbar() -> bool:
    """Initialize Rollbar exception logging"""
    key = environ.get("LOG_KEY")
    if not (key and ENV == "production"):
        return False
    rollbar.init(key, root="mfold_bounds", allow_logging_basic_config=False)
    return True
