"""Entry point for ``python -m surface_smoothing``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional


def _build_parser() -> argparse.ArgumentParser:
    from surface_smoothing.cli.commands import register_all

    parser = argparse.ArgumentParser(
        prog="surface-smoothing",
        description="Surface Smoothing - exact invariants of surface singularities and their smoothings",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default=None,
        help="Report format (default: from config, text)",
    )
    parser.add_argument(
        "--config",
        type=Path,
        default=None,
        help="Config file (default: $SURFACE_SMOOTHING_HOME/config.json)",
    )
    parser.add_argument(
        "--log-level",
        choices=("debug", "info", "warning", "error"),
        default="warning",
        help="Logging level (default: warning)",
    )
    parser.add_argument("--quiet", action="store_true", help="Only log errors; hide successful text reports")
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_all(subparsers)
    return parser


def _setup_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format="%(asctime)s  %(levelname)-8s  %(name)s  %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    _setup_logging("error" if args.quiet else args.log_level)

    logger = logging.getLogger("surface_smoothing")
    logger.info("surface-smoothing %s starting", args.command)

    # Late import so logging is configured before any module-level loggers fire
    from surface_smoothing.app import SmoothingApp
    from surface_smoothing.core.config import CONFIG_PATH, SmoothingConfig
    from surface_smoothing.core.errors import SmoothingError

    try:
        config = SmoothingConfig.load(args.config or CONFIG_PATH)
    except SmoothingError as exc:
        logger.error("%s", exc)
        return exc.exit_code

    try:
        return SmoothingApp(config=config).run(args)
    except Exception:
        logger.exception("Fatal error")
        return 1


if __name__ == "__main__":
    sys.exit(main())
