"""
Checked-in defaults and environment settings
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple

import yaml

from .core.enumeration import ENUMERATION_CAP

DEFAULTS_PATH = Path(__file__).parent / "presets" / "defaults.yaml"
WORKERS_ENV = "KURATOWSKI_WORKERS"
SECTIONS = ("name", "description", "saturation", "validation", "order", "count", "equality", "growth", "table1", "table2")


@dataclass(frozen=True)
class Defaults:
    """Bounds and caps used when a command is run without overrides"""

    saturation_cap: int = 10000
    exhaustive_points: int = 12
    validation_samples: int = 200
    validation_seed: int = 0
    order_max_points: int = 5
    count_max_points: int = 3
    equality_max_points: int = 4
    growth_cap: int = 2000
    growth_sizes: Tuple[int, ...] = (6, 10, 14)
    table1_bounds: Dict[str, int] = field(default_factory=dict)
    table2_points: int = 3
    table2_max_generators: int = 4

    def __post_init__(self) -> None:
        """Validate ranges"""
        if self.saturation_cap < 1 or self.growth_cap < 1:
            raise ValueError("Saturation caps must be positive")
        bounds = (self.order_max_points, self.count_max_points, self.equality_max_points)
        if min(bounds) < 1 or max(bounds) > ENUMERATION_CAP:
            raise ValueError(f"Sweep bounds must be between 1 and {ENUMERATION_CAP}")
        if any(n < 1 for n in self.growth_sizes):
            raise ValueError("Growth sizes must be positive")
        for cell, bound in self.table1_bounds.items():
            if not 1 <= bound <= ENUMERATION_CAP:
                raise ValueError(f"Witness bound for cell {cell} out of range: {bound}")

    def witness_bound(self, row: str, column: str) -> int:
        """Recorded witness bound for a table1 cell (falls back to the order bound)"""
        return self.table1_bounds.get(f"{row}|{column}", self.order_max_points)


def load_defaults(path: Optional[Path] = None) -> Defaults:
    """Load the YAML defaults file"""
    with open(path or DEFAULTS_PATH) as f:
        data = yaml.safe_load(f) or {}
    unknown = sorted(set(data) - set(SECTIONS))
    if unknown:
        raise ValueError(f"Unknown defaults section(s): {', '.join(unknown)}")

    saturation = data.get("saturation", {})
    validation = data.get("validation", {})
    growth = data.get("growth", {})
    table2 = data.get("table2", {})

    return Defaults(
        saturation_cap=int(saturation.get("cap", 10000)),
        exhaustive_points=int(validation.get("exhaustive_points", 12)),
        validation_samples=int(validation.get("samples", 200)),
        validation_seed=int(validation.get("seed", 0)),
        order_max_points=int(data.get("order", {}).get("max_points", 5)),
        count_max_points=int(data.get("count", {}).get("max_points", 3)),
        equality_max_points=int(data.get("equality", {}).get("max_points", 4)),
        growth_cap=int(growth.get("cap", 2000)),
        growth_sizes=tuple(int(n) for n in growth.get("sizes", [6, 10, 14])),
        table1_bounds={str(k): int(v) for k, v in data.get("table1", {}).get("witness_bounds", {}).items()},
        table2_points=int(table2.get("brute_force_points", 3)),
        table2_max_generators=int(table2.get("max_generators", 4)),
    )


def worker_count() -> int:
    """Worker processes for parallel sweeps, from the environment (1 = sequential)"""
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    if workers < 1:
        raise ValueError(f"{WORKERS_ENV} must be at least 1, got {workers}")
    return workers
