"""
Environment-driven settings.

Values come from the process environment, optionally seeded from a `.env` file at
the repository root. CLI flags override them.
"""
import os
import logging
from pathlib import Path

from dotenv import load_dotenv

from config.constants import LogConfig, OracleConfig

logger = logging.getLogger(__name__)

env_path = os.path.join(os.path.dirname(__file__), '../.env')
load_dotenv(env_path)


class Settings:
    """Runtime settings resolved from the environment."""

    def __init__(self):
        self.log_level = os.getenv('LOG_LEVEL', LogConfig.DEFAULT_LOG_LEVEL)
        self.log_dir = Path(os.getenv('LOG_DIR', 'logs'))
        self.workers = int(os.getenv('ROUTING_WORKERS', str(os.cpu_count() or 1)))
        self.oracle_max_paths = int(os.getenv('ORACLE_MAX_PATHS', str(OracleConfig.MAX_PATHS)))

    def resolve_workers(self, requested=None) -> int:
        """Worker count for pools; an explicit request wins over the environment."""
        workers = requested if requested is not None else self.workers
        return max(1, int(workers))


settings = Settings()
