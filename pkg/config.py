# Configuration management for the k-GRoDel toolkit
import os
import logging
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

RANKING_METHODS = ("strict", "average", "percentile")


class Config:
    """Toolkit configuration with environment variable support"""

    # Numerics
    TOL: float = float(os.getenv('GRODEL_TOL', '1e-8'))
    TIE_TOL: float = float(os.getenv('GRODEL_TIE_TOL', '1e-9'))
    EIG_CUTOFF: float = float(os.getenv('GRODEL_EIG_CUTOFF', '1e-10'))  # relative to largest eigenvalue
    BRIDGE_TOL: float = float(os.getenv('GRODEL_BRIDGE_TOL', '1e-9'))
    FI_MIN_DENOMINATOR: float = float(os.getenv('GRODEL_FI_MIN_DENOMINATOR', '1e-6'))

    # Solvers
    THREADS: int = int(os.getenv('GRODEL_THREADS', '1'))
    EXACT_BUDGET: int = int(float(os.getenv('GRODEL_EXACT_BUDGET', '1e8')))  # max C(m, k)
    DEFAULT_K: int = int(os.getenv('GRODEL_DEFAULT_K', '20'))
    SEED: int = int(os.getenv('GRODEL_SEED', '0'))
    STATE_CACHE: int = int(os.getenv('GRODEL_STATE_CACHE', '64'))

    # Scoring and output
    SCORE_RANKING: str = os.getenv('GRODEL_SCORE_RANKING', 'strict')
    OUTPUT_DIR: str = os.getenv('GRODEL_OUTPUT_DIR', '.')
    LOG_LEVEL: str = os.getenv('GRODEL_LOG_LEVEL', 'INFO')

    @classmethod
    def get_threads(cls, cli_value: Optional[int] = None) -> int:
        """Resolve the worker count: --threads first, then GRODEL_THREADS"""
        threads = cli_value if cli_value is not None else cls.THREADS
        return max(1, int(threads))

    @classmethod
    def get_log_level(cls) -> int:
        return getattr(logging, cls.LOG_LEVEL.upper(), logging.INFO)

    @classmethod
    def validate_config(cls) -> None:
        """Validate critical configuration values"""
        for name in ('TOL', 'TIE_TOL', 'EIG_CUTOFF', 'BRIDGE_TOL', 'FI_MIN_DENOMINATOR'):
            value = getattr(cls, name)
            if not 0 < value < 1:
                logger.warning(f"GRODEL_{name}={value} is outside (0, 1); numeric checks may misbehave")

        if cls.THREADS < 1:
            logger.warning(f"GRODEL_THREADS={cls.THREADS} is not positive, falling back to 1")

        if cls.SCORE_RANKING not in RANKING_METHODS:
            logger.warning(f"Unknown GRODEL_SCORE_RANKING '{cls.SCORE_RANKING}', using 'strict'")
            cls.SCORE_RANKING = 'strict'

        if cls.EXACT_BUDGET > 10 ** 9:
            logger.warning(f"Exact enumeration budget {cls.EXACT_BUDGET} will take days single-threaded")


# Create global config instance
config = Config()
