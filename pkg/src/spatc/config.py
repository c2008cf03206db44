"""Intersection description: available movements, naming, and safety data.

Everything situational lives here rather than in code: which movements exist,
how free-text names map to canonical ids, which vehicular movements accompany
each pedestrian crossing by default, inter-green defaults, the conflict
matrix, and the colors used by graphical exports.  The packaged default
models a standard four-leg intersection and can be replaced by any JSON file
with the same schema.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import movements

INTER_GREEN_KEYS = ("lateStart", "redAmber", "yellow", "greenFlash", "allRed", "earlyCutOff")

_DEFAULT_ASSET = "default_intersection.json"


def _norm(name: str) -> str:
    """Case/spacing-insensitive key for alias lookup."""
    return re.sub(r"[\s_/-]+", " ", name.strip().lower())


def _pair(a: str, b: str) -> frozenset:
    return frozenset((a, b))


@dataclass(frozen=True)
class IntersectionConfig:
    name: str
    movements: frozenset
    aliases: dict
    ped_parents: dict
    inter_green: dict
    min_walk: int
    conflicts: frozenset
    exceptions: frozenset
    critical: tuple
    palette: dict

    def __post_init__(self):
        lookup = {}
        for mv in self.movements:
            lookup[_norm(mv)] = mv
        for mv in movements.PSEUDO:
            lookup[_norm(mv)] = mv
        for alias, target in self.aliases.items():
            lookup[_norm(alias)] = target
        object.__setattr__(self, "_lookup", lookup)

    def canonical(self, name: str):
        """Canonical MovementId for ``name``, or None when unknown."""
        if name in self.movements or name in movements.PSEUDO:
            return name
        return self._lookup.get(_norm(name))

    def conflicting(self, a: str, b: str) -> bool:
        return _pair(a, b) in self.conflicts

    def excepted(self, a: str, b: str) -> bool:
        return _pair(a, b) in self.exceptions

    def default_params(self, phase: str) -> dict:
        """Inter-green seconds applied when a record leaves them out.

        Vehicular only: pedestrian rows never show yellow/red-amber, so a
        phantom default would distort greenTime -> split conversion without
        ever being rendered.
        """
        if movements.is_vehicular(phase):
            return dict(self.inter_green)
        return {key: 0 for key in INTER_GREEN_KEYS}

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "movements": sorted(self.movements, key=movements.sort_key),
            "aliases": dict(self.aliases),
            "pedParents": {k: list(v) for k, v in self.ped_parents.items()},
            "interGreen": dict(self.inter_green),
            "minWalk": self.min_walk,
            "conflicts": sorted(sorted(p) for p in self.conflicts),
            "exceptions": sorted(sorted(p) for p in self.exceptions),
            "critical": list(self.critical),
            "palette": dict(self.palette),
        }


def config_from_dict(data: dict) -> IntersectionConfig:
    avail = frozenset(data["movements"])
    for mv in avail:
        if not movements.is_known(mv) or movements.is_pseudo(mv):
            raise ValueError(f"config lists unknown movement {mv!r}")

    aliases = dict(data.get("aliases", {}))
    for alias, target in aliases.items():
        if target not in avail:
            raise ValueError(f"alias {alias!r} points at unavailable movement {target!r}")

    ped_parents = {}
    for ped, parents in data.get("pedParents", {}).items():
        if not movements.is_pedestrian(ped):
            raise ValueError(f"pedParents key {ped!r} is not a pedestrian movement")
        parents = tuple(parents)
        if not parents:
            raise ValueError(f"pedParents for {ped} is empty")
        # Primary parent is the adjacent through; extra parents (two-stage
        # halves) may be turning movements.
        if not parents[0].endswith("T"):
            raise ValueError(f"primary parent of {ped} must be a through movement")
        for parent in parents:
            if parent not in avail or not movements.is_vehicular(parent):
                raise ValueError(f"pedParents for {ped} names unavailable movement {parent!r}")
        ped_parents[ped] = parents

    inter_green = {key: 0 for key in INTER_GREEN_KEYS}
    for key, value in data.get("interGreen", {}).items():
        if key not in INTER_GREEN_KEYS:
            raise ValueError(f"unknown interGreen key {key!r}")
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"interGreen {key} must be a non-negative integer")
        inter_green[key] = value

    min_walk = data.get("minWalk", 7)
    if not isinstance(min_walk, int) or isinstance(min_walk, bool) or min_walk < 1:
        raise ValueError("minWalk must be an integer >= 1")

    def pair_set(key):
        pairs = set()
        for item in data.get(key, []):
            a, b = item
            if a == b:
                raise ValueError(f"{key} pair ({a}, {b}) is degenerate")
            for mv in (a, b):
                if mv not in avail:
                    raise ValueError(f"{key} pair names unavailable movement {mv!r}")
            pairs.add(_pair(a, b))
        return frozenset(pairs)

    conflicts = pair_set("conflicts")
    exceptions = pair_set("exceptions")

    critical = tuple(data.get("critical", []))
    for mv in critical:
        if mv not in avail:
            raise ValueError(f"critical movement {mv!r} not available")

    palette = {str(k): str(v) for k, v in data.get("palette", {}).items()}

    return IntersectionConfig(
        name=data.get("name", "intersection"),
        movements=avail,
        aliases=aliases,
        ped_parents=ped_parents,
        inter_green=inter_green,
        min_walk=min_walk,
        conflicts=conflicts,
        exceptions=exceptions,
        critical=critical,
        palette=palette,
    )


def load_config(path=None) -> IntersectionConfig:
    """Load an intersection file, or the packaged four-leg default."""
    if path is None:
        text = resources.files("spatc").joinpath("assets").joinpath(_DEFAULT_ASSET).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return config_from_dict(json.loads(text))
