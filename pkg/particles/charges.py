"""
Electric and color charge of roots in the twisted e8 basis
{ωL/4, W/4, B/4, ωR/4, k, y, m, c} (coordinates o1..o8).

    s = (o2 + o3) / 2
    s even:  q = (o2 + o3 + o5)/4 - (o6 + o7 + o8)/12
    s odd:   q = -(o3 + o4 + o5)/4 - (o6 + o7 + o8)/12

Colors: o6 → b, o7 → g, o8 → r; a negative entry is the color, a positive
one the anti-color.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import NamedTuple

from hyperfoam.exceptions import DecodeError

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / "data"
ROOTS_FILE = DATA_DIR / "roots.json"
BITSWAPS_FILE = DATA_DIR / "blue_up_quark_bitswaps.json"

COLOR_AXES = (("b", 5), ("g", 6), ("r", 7))


class Root8(NamedTuple):
    o1: int
    o2: int
    o3: int
    o4: int
    o5: int
    o6: int
    o7: int
    o8: int

    @classmethod
    def of(cls, values) -> Root8:
        values = list(values)
        if len(values) != 8:
            raise DecodeError(f"a root has 8 coordinates, got {len(values)}")
        try:
            return cls(*(int(v) for v in values))
        except (TypeError, ValueError):
            raise DecodeError(f"root coordinates must be integers: {values!r}") from None

    def negated(self) -> Root8:
        return Root8(*(-v for v in self))


def electric_charge(o) -> Fraction:
    o = Root8.of(o)
    if (o.o2 + o.o3) % 2:
        raise DecodeError(f"o2 + o3 = {o.o2 + o.o3} is odd; the parity branch is undefined")
    colour_part = Fraction(o.o6 + o.o7 + o.o8, 12)
    if ((o.o2 + o.o3) // 2) % 2 == 0:
        return Fraction(o.o2 + o.o3 + o.o5, 4) - colour_part
    return -Fraction(o.o3 + o.o4 + o.o5, 4) - colour_part


def color_charge(o) -> tuple[str, ...]:
    o = Root8.of(o)
    colors = []
    for name, index in COLOR_AXES:
        if o[index] < 0:
            colors.append(name)
        elif o[index] > 0:
            colors.append(f"anti-{name}")
    return tuple(colors)


def anti_colors(colors) -> tuple[str, ...]:
    return tuple(c[len("anti-"):] if c.startswith("anti-") else f"anti-{c}" for c in colors)


def charge_conjugate(o) -> Root8:
    return Root8.of(o).negated()


def format_charge(charge: Fraction) -> str:
    return str(charge.numerator) if charge.denominator == 1 else f"{charge.numerator}/{charge.denominator}"


@dataclass(frozen=True)
class ParticleRecord:
    root: Root8
    charge: Fraction
    colors: tuple[str, ...]
    label: str
    note: str = ""

    def summary(self) -> str:
        return f"charge={format_charge(self.charge)} colors={','.join(self.colors)} label={self.label}"


@dataclass(frozen=True)
class FixtureRow:
    root: Root8
    label: str
    expected_charge: Fraction
    expected_colors: tuple[str, ...]
    note: str


def _load_json(path: Path) -> dict:
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


@lru_cache(maxsize=None)
def fixture_rows(path: Path = ROOTS_FILE) -> tuple[FixtureRow, ...]:
    from particles.serializers import RootsFixtureSerializer

    serializer = RootsFixtureSerializer(data=_load_json(path))
    if not serializer.is_valid():
        raise DecodeError(f"invalid root fixture {path}: {serializer.errors}")
    return tuple(
        FixtureRow(
            root=Root8.of(row["root"]),
            label=row["label"],
            expected_charge=row["expected_charge"],
            expected_colors=tuple(row["expected_colors"]),
            note=row.get("note", ""),
        )
        for row in serializer.validated_data["rows"]
    )


def classify(o, rows=None) -> ParticleRecord:
    """Decode a root; the label comes from the fixture when the root is listed there."""
    o = Root8.of(o)
    charge = electric_charge(o)
    colors = color_charge(o)
    for row in fixture_rows() if rows is None else rows:
        if row.root == o:
            if row.note:
                logger.info("root %s: %s", list(o), row.note)
            return ParticleRecord(o, charge, colors, row.label, row.note)
    label = f"charge={format_charge(charge)}, colors={','.join(colors) or 'none'}"
    return ParticleRecord(o, charge, colors, label)


@dataclass(frozen=True)
class BitswapPattern:
    label: str
    root: Root8
    swaps: tuple[tuple[str, int], ...]

    def leaves(self, slot: str | None = None) -> list[int]:
        return [leaf for name, leaf in self.swaps if slot is None or name == slot]


@lru_cache(maxsize=None)
def fixture_bitswap_pattern(path: Path = BITSWAPS_FILE) -> BitswapPattern:
    from particles.serializers import BitswapPatternSerializer

    serializer = BitswapPatternSerializer(data=_load_json(path))
    if not serializer.is_valid():
        raise DecodeError(f"invalid bit-swap fixture {path}: {serializer.errors}")
    data = serializer.validated_data
    return BitswapPattern(
        label=data["label"],
        root=Root8.of(data["root"]),
        swaps=tuple((swap["slot"], swap["leaf"]) for swap in data["swaps"]),
    )


def apply_bitswap_pattern(net, supernode: int, pattern: BitswapPattern, undo: bool = False) -> list:
    """Invert every swap of the pattern in one supernode; undo replays them in reverse order."""
    from network.moves import invert_bit

    leaves = pattern.leaves()
    if undo:
        leaves = list(reversed(leaves))
    events = []
    for leaf in leaves:
        events.extend(invert_bit(net, supernode, leaf))
    return events
