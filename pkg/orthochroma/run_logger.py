# Run Logger
"""
Saves subcommand outputs and reports so a run can be reproduced and audited.

Directory structure:
    data/runs/{subcommand}-seed{seed}/
    ├── config.json     # RunConfig of the run
    ├── output.{ext}    # Exactly what was written to stdout
    └── report.json     # Structured report, when the subcommand has one

Every file is written atomically: temp file first, then rename.
"""

import json
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel

from orthochroma.models import RunConfig


# =============================================================================
# Constants
# =============================================================================

DEFAULT_BASE_DIR = Path("data/runs")

OUTPUT_EXTENSIONS = {"json": "json", "dimacs": "col", "text": "txt"}


def write_atomic(path: Path, content: Union[str, bytes]) -> None:
    """Write a file via a sibling temp file and a rename."""
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_path = path.with_name(path.name + ".tmp")
    if isinstance(content, bytes):
        temp_path.write_bytes(content)
    else:
        temp_path.write_text(content, encoding="utf-8")
    temp_path.replace(path)


# =============================================================================
# RunLogger Class
# =============================================================================

class RunLogger:
    """
    Saves the evidence of one CLI run: its config, its stdout output and
    its report model.
    """

    def __init__(self, base_dir: Optional[Path] = None):
        """
        Initialize the RunLogger.

        Args:
            base_dir: Base directory for runs. Defaults to data/runs.
        """
        self.base_dir = base_dir if base_dir is not None else DEFAULT_BASE_DIR

    def run_dir(self, config: RunConfig) -> Path:
        return self.base_dir / f"{config.subcommand}-seed{config.seed}"

    def _ensure_run_dir(self, config: RunConfig) -> Path:
        run_dir = self.run_dir(config)
        run_dir.mkdir(parents=True, exist_ok=True)
        return run_dir

    def save_config(self, config: RunConfig) -> Path:
        path = self._ensure_run_dir(config) / "config.json"
        write_atomic(path, config.model_dump_json(indent=2))
        return path

    def save_output(self, config: RunConfig, output: str) -> Path:
        """
        Save the stdout output of a run.

        Args:
            config: Run configuration (names the directory and extension)
            output: Text that was printed
        """
        ext = OUTPUT_EXTENSIONS.get(config.output_format, "txt")
        path = self._ensure_run_dir(config) / f"output.{ext}"
        write_atomic(path, output)
        return path

    def save_report(self, config: RunConfig, report: Union[BaseModel, dict]) -> Path:
        """
        Save a structured report.

        Args:
            config: Run configuration
            report: Pydantic model or plain JSON-compatible dict
        """
        path = self._ensure_run_dir(config) / "report.json"
        if isinstance(report, BaseModel):
            content = report.model_dump_json(indent=2)
        else:
            content = json.dumps(report, indent=2)
        write_atomic(path, content)
        return path
