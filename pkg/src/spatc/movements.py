"""Movement identifiers for a four-leg intersection.

Vehicular movements combine an approach direction (NB, SB, EB, WB, by travel
direction) with a turn (L left, T through, R right, U u-turn).  Pedestrian
crossings are named by the leg they cross (NorthPed crosses the northern leg);
two-stage crossings split into an A half (the side where vehicles enter the
intersection) and a B half (the exiting side).

Two pseudo phases exist only inside plans: ``dummyPhase`` occupies time in a
stage without producing output, and ``AllPed`` stands for an exclusive
pedestrian stage and is expanded to the four one-stage crossings during
cleansing.
"""

from __future__ import annotations

DIRECTIONS = ("NB", "SB", "EB", "WB")
TURNS = ("L", "T", "R", "U")

VEHICULAR = tuple(f"{d}{t}" for d in DIRECTIONS for t in TURNS)

PED_SINGLE = ("NorthPed", "SouthPed", "EastPed", "WestPed")
PED_HALVES = (
    "NorthPedA", "NorthPedB",
    "SouthPedA", "SouthPedB",
    "EastPedA", "EastPedB",
    "WestPedA", "WestPedB",
)
PEDESTRIAN = PED_SINGLE + PED_HALVES

DUMMY = "dummyPhase"
ALL_PED = "AllPed"

MOVEMENTS = VEHICULAR + PEDESTRIAN
PSEUDO = (DUMMY, ALL_PED)

# Row order used by every exporter: vehicular by direction then turn,
# pedestrians after.
CANONICAL_ORDER = list(MOVEMENTS)
_ORDER_INDEX = {name: i for i, name in enumerate(CANONICAL_ORDER)}


def is_vehicular(name: str) -> bool:
    return name in VEHICULAR


def is_pedestrian(name: str) -> bool:
    return name in PEDESTRIAN


def is_pseudo(name: str) -> bool:
    return name in PSEUDO


def is_known(name: str) -> bool:
    return name in MOVEMENTS or name in PSEUDO


def is_left_turn(name: str) -> bool:
    return name in VEHICULAR and name.endswith("L")


def sort_key(name: str) -> int:
    """Canonical position; unknown names sort last (stable)."""
    return _ORDER_INDEX.get(name, len(CANONICAL_ORDER))


def sort_movements(names) -> list[str]:
    return sorted(names, key=lambda n: (sort_key(n), n))
