"""Application orchestrator: run one sub-command and print its report."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, TextIO

from surface_smoothing.cli.render import render_json, render_text
from surface_smoothing.core.config import SmoothingConfig
from surface_smoothing.core.errors import IdentityFailure, IterationLimitError, SmoothingError

logger = logging.getLogger(__name__)

PROJECT_ROOT: Path = Path(__file__).resolve().parent.parent.parent
FIXTURES_DIR: Path = PROJECT_ROOT / "fixtures"


class SmoothingApp:
    """Dispatches parsed arguments to a command handler and maps failures to exit codes."""

    def __init__(
        self,
        config: Optional[SmoothingConfig] = None,
        fixtures_dir: Optional[Path] = None,
        stdout: Optional[TextIO] = None,
    ) -> None:
        self.config: SmoothingConfig = config or SmoothingConfig.load()
        self.fixtures_dir: Path = fixtures_dir or FIXTURES_DIR
        self._stdout = stdout

    @property
    def stdout(self) -> TextIO:
        return self._stdout or sys.stdout

    def _output_format(self, args: argparse.Namespace) -> str:
        return getattr(args, "format", None) or self.config.output.format

    def run(self, args: argparse.Namespace) -> int:
        try:
            report = args.handler(args, self)
        except (IdentityFailure, IterationLimitError) as exc:
            logger.error("%s: %s", type(exc).__name__, exc)
            return exc.exit_code
        except SmoothingError as exc:
            logger.warning("%s: %s", type(exc).__name__, exc)
            return exc.exit_code
        except Exception:
            logger.exception("Fatal error")
            return 1

        code = report.exit_code()
        if self._output_format(args) == "json":
            text = render_json(report, self.config.output.json_indent)
        elif code == 0 and getattr(args, "quiet", False):
            text = ""
        else:
            text = render_text(report)
        if text:
            print(text, file=self.stdout)
        if code:
            logger.warning("%s finished with exit code %d", report.command, code)
        return code
