from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

from surface_smoothing.core.errors import InputError

_data_dir = os.environ.get("SURFACE_SMOOTHING_HOME")
CONFIG_DIR = Path(_data_dir) if _data_dir else Path.home() / ".surface-smoothing"
CONFIG_PATH = CONFIG_DIR / "config.json"


@dataclass
class LimitSettings:
    iteration_factor: int = 10
    max_enumeration_vertices: int = 8
    min_enumeration_weight: int = -6


@dataclass
class OutputSettings:
    format: str = "text"
    json_indent: int = 2


@dataclass
class EnumerationSettings:
    workers: int = 1
    default_max_vertices: int = 5
    default_min_weight: int = -4


@dataclass
class QuotientSettings:
    action_convention: str = "covariant"


@dataclass
class SmoothingConfig:
    limits: LimitSettings = field(default_factory=LimitSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    enumeration: EnumerationSettings = field(default_factory=EnumerationSettings)
    quotient: QuotientSettings = field(default_factory=QuotientSettings)

    def save(self, path: Path = CONFIG_PATH) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(asdict(self), indent=2), encoding="utf-8")

    @classmethod
    def load(cls, path: Path = CONFIG_PATH) -> SmoothingConfig:
        if not path.exists():
            return cls()

        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            return cls(
                limits=LimitSettings(**data.get("limits", {})),
                output=OutputSettings(**data.get("output", {})),
                enumeration=EnumerationSettings(**data.get("enumeration", {})),
                quotient=QuotientSettings(**data.get("quotient", {})),
            )
        except (json.JSONDecodeError, TypeError) as exc:
            raise InputError(f"Invalid config file {path}: {exc}") from exc
