# Configuration
"""
Environment-driven settings.

A `.env` file at the project root is loaded first when present; variables
already set in the process environment win.

    ORTHOCHROMA_THREADS      worker cap for enumeration and search (default 1)
    ORTHOCHROMA_SOLVER_CAP   vertex cap of the exact chromatic solver (default 64)
    ORTHOCHROMA_RUNS_DIR     where --save writes run artifacts (default data/runs)
"""

import logging
import os
from pathlib import Path
from typing import Mapping, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError


logger = logging.getLogger(__name__)


class ConfigurationError(ValueError):
    """Raised when an environment variable holds an invalid value."""
    pass


ENV_VARS = {
    "threads": "ORTHOCHROMA_THREADS",
    "solver_cap": "ORTHOCHROMA_SOLVER_CAP",
    "runs_dir": "ORTHOCHROMA_RUNS_DIR",
}


class Settings(BaseModel):
    """Resolved runtime settings."""
    threads: int = Field(default=1, ge=1, description="Maximum worker processes")
    solver_cap: int = Field(default=64, ge=1, description="Soft vertex cap of the exact solver")
    runs_dir: Path = Field(default=Path("data/runs"), description="Directory for saved runs")

    def clamp_workers(self, requested: int) -> int:
        """Workers actually used for a requested count."""
        return max(1, min(requested, self.threads))


def get_project_root() -> Path:
    """Get the project root directory."""
    return Path(__file__).parent.parent


def load_settings(environ: Optional[Mapping[str, str]] = None, env_file: Optional[Path] = None) -> Settings:
    """
    Load settings from the environment.

    Args:
        environ: Variables to read instead of os.environ (no .env loading then)
        env_file: .env file to load; defaults to <project root>/.env

    Returns:
        Settings

    Raises:
        ConfigurationError: If a variable is set to an invalid value
    """
    if environ is None:
        env_path = env_file if env_file is not None else get_project_root() / ".env"
        if env_path.exists():
            load_dotenv(env_path)
            logger.debug(f"Loaded environment from {env_path}")
        environ = os.environ

    values = {field: environ[var] for field, var in ENV_VARS.items() if environ.get(var)}
    try:
        return Settings(**values)
    except ValidationError as e:
        field = str(e.errors()[0]["loc"][0])
        var = ENV_VARS.get(field, field)
        raise ConfigurationError(f"Invalid {var}={environ.get(var)!r}: {e.errors()[0]['msg']}") from e
