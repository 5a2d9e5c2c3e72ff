"""
Configuration settings for the tiling census.
"""
import os
import sys
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

PROJECT_ROOT = Path(__file__).resolve().parent.parent


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


class Config:
    """Central configuration for the tiling census"""

    # ===== ORACLE BUDGETS =====
    ORACLE_MAX_STATES = int(os.getenv("TILING_ORACLE_MAX_STATES", "10000000"))
    ORACLE_MAX_FLOOD = int(os.getenv("TILING_ORACLE_MAX_FLOOD", "1000000"))
    BUDGET_OVERRIDE = _flag("TILING_BUDGET_OVERRIDE", "false")

    # Below this many tilings count_orbits_direct(method="auto") scans directly
    DIRECT_THRESHOLD = int(os.getenv("TILING_DIRECT_THRESHOLD", "200000"))

    # Processes used to shard a direct scan
    WORKERS = int(os.getenv("TILING_WORKERS", "1"))

    # ===== DATA =====
    MAPPING_FILE = os.getenv(
        "TILING_MAPPING_FILE", str(PROJECT_ROOT / "data" / "oeis_mapping.yaml")
    )

    # ===== OBSERVABILITY =====
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    ENABLE_METRICS = _flag("ENABLE_METRICS", "true")
    METRICS_DIR = os.getenv("TILING_METRICS_DIR", "logs")

    @classmethod
    def budget(cls, force: bool = False):
        """Oracle budget from the current settings; force lifts both caps"""
        from src.models.tiling_models import OracleBudget

        return OracleBudget(
            max_states=cls.ORACLE_MAX_STATES,
            max_flood=cls.ORACLE_MAX_FLOOD,
            override=force or cls.BUDGET_OVERRIDE,
        )

    @classmethod
    def is_verbose(cls) -> bool:
        return cls.LOG_LEVEL.upper() == "DEBUG"

    @classmethod
    def validate(cls):
        """Validate configuration"""
        from src.utils.error_handler import ConfigError

        for name in ("ORACLE_MAX_STATES", "ORACLE_MAX_FLOOD", "DIRECT_THRESHOLD", "WORKERS"):
            if getattr(cls, name) < 1:
                raise ConfigError(f"{name} must be positive, got {getattr(cls, name)}")

        return True

    @classmethod
    def print_config_info(cls):
        """Print configuration information to stderr"""
        print(f"[CONFIG] Direct-scan budget: {cls.ORACLE_MAX_STATES:,} tilings", file=sys.stderr)
        print(f"[CONFIG] Flood-fill budget: {cls.ORACLE_MAX_FLOOD:,} tilings", file=sys.stderr)
        print(f"[CONFIG] Budget override: {cls.BUDGET_OVERRIDE}", file=sys.stderr)
        print(f"[CONFIG] Direct threshold: {cls.DIRECT_THRESHOLD:,}", file=sys.stderr)
        print(f"[CONFIG] Workers: {cls.WORKERS}", file=sys.stderr)
        print(f"[CONFIG] Mapping file: {cls.MAPPING_FILE}", file=sys.stderr)
