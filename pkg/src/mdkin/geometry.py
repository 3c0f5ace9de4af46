"""Robot geometry parameters and their configuration file format.

Lengths are in millimeters.  A geometry file is flat "key = value" text,
one entry per line, with '#' comments, e.g.::

    # lengths in mm
    l  = 400
    l0 = 300
    l1 = 200
    l2 = 150
    l3 = 170
    l4 = 50

The file path may also be supplied through the MDKIN_GEOMETRY environment
variable; explicit arguments win over the environment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, asdict
from pathlib import Path

_KEYS = ("l", "l0", "l1", "l2", "l3", "l4")


@dataclass(frozen=True)
class RobotGeometry:
    """Link lengths of the hybrid parallel robot (mm)."""

    l: float = 400.0
    l0: float = 300.0
    l1: float = 200.0
    l2: float = 150.0
    l3: float = 170.0
    l4: float = 50.0

    def __post_init__(self):
        for k in _KEYS:
            v = getattr(self, k)
            if not v > 0.0:
                raise ValueError(f"geometry length {k} must be positive, got {v}")

    def as_dict(self) -> dict:
        return asdict(self)


def load_geometry(path: str | Path | None = None) -> RobotGeometry:
    """Load geometry from a file, the environment, or fall back to defaults."""
    if path is None:
        path = os.environ.get("MDKIN_GEOMETRY")
    if path is None:
        return RobotGeometry()
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, _, val = line.partition("=")
        key = key.strip()
        if key not in _KEYS:
            raise ValueError(f"{path}:{lineno}: unknown geometry key {key!r}")
        values[key] = float(val.strip())
    return RobotGeometry(**values)


def save_geometry(geometry: RobotGeometry, path: str | Path) -> None:
    lines = ["# mdkin robot geometry, lengths in mm"]
    lines += [f"{k} = {getattr(geometry, k)!r}" for k in _KEYS]
    Path(path).write_text("\n".join(lines) + "\n")
