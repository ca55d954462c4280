import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Only threading and logging read the environment; everything that shapes a
# result comes from the job itself.
THREADS = max(1, int(os.getenv("TORIC_THREADS", "1")))

LOG_LEVEL = os.getenv("TORIC_LOG_LEVEL", "INFO").upper()
LOG_DIR = os.getenv("TORIC_LOG_DIR", "logs")

# 2^31 - 1; a job overrides it with `prime`.
DEFAULT_PRIME = 2147483647
SAMPLE_HEIGHT = 10000
GENERIC_RANK_POINTS = 3
GENERIC_RANK_HEIGHT = 10**9
MINOR_SIZE_GUARD = 12
OVERSAMPLING = 10

FIXTURE_DIR = Path(__file__).resolve().parent / "loaders" / "fixtures"
