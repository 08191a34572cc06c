"""Plain-text rendering of reports."""
from __future__ import annotations

import json
from typing import Any

from surface_smoothing.cli.reports import Report


def render_json(report: Report, indent: int = 2) -> str:
    return json.dumps(report.model_dump(mode="json", by_alias=True), indent=indent)


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _lines(key: str, value: Any, depth: int) -> list[str]:
    pad = "  " * depth
    if isinstance(value, dict):
        if value and all(not isinstance(v, (dict, list)) for v in value.values()):
            inline = " ".join(f"{k}={_scalar(v)}" for k, v in value.items())
            return [f"{pad}{key}: {inline}"]
        out = [f"{pad}{key}:"]
        for k, v in value.items():
            out.extend(_lines(k, v, depth + 1))
        return out
    if isinstance(value, list):
        if value and all(isinstance(v, dict) for v in value):
            out = [f"{pad}{key}:"]
            for item in value:
                out.append(f"{pad}  - " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
            return out
        if not value:
            return [] if key == "warnings" else [f"{pad}{key}: -"]
        return [f"{pad}{key}: " + ", ".join(_scalar(v) for v in value)]
    return [f"{pad}{key}: {_scalar(value)}"]


def render_text(report: Report) -> str:
    data = report.model_dump(mode="json", by_alias=True)
    data.pop("schema", None)
    command = data.pop("command")
    lines = [f"== {command}"]
    for key, value in data.items():
        lines.extend(_lines(key, value, 0))
    return "\n".join(lines)
