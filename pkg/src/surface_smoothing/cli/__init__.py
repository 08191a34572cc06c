from surface_smoothing.cli.commands import register_all
from surface_smoothing.cli.harness import run_enumeration, scan_chains
from surface_smoothing.cli.render import render_json, render_text
from surface_smoothing.cli.reports import Report

__all__ = [
    "register_all",
    "run_enumeration",
    "scan_chains",
    "render_json",
    "render_text",
    "Report",
]
