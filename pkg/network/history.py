"""
Spin foam: the append-only log of accepted Pachner 2-2 moves.

Time is logical only (the sequence number). Replaying a log on a freshly
assembled network reproduces the logged state bit for bit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from lattice.lattice import Lattice
from network.network import SpinNetwork, assemble

logger = logging.getLogger(__name__)

MOVE_KIND = "2-2"


@dataclass(frozen=True)
class FoamEvent:
    seq: int
    edge: tuple[int, int]
    kind: str
    pairing: str
    exchanged: tuple[int, int]
    bits_before: tuple[tuple[int, int], ...]
    bits_after: tuple[tuple[int, int], ...]

    @property
    def flipped_bits(self) -> list[int]:
        before = dict(self.bits_before)
        return [node for node, b in self.bits_after if before.get(node) != b]


def history(net: SpinNetwork) -> tuple[FoamEvent, ...]:
    return tuple(net.events)


def replay(lattice: Lattice, events) -> SpinNetwork:
    """Assemble the pristine network and re-apply every event in order."""
    from network.moves import pachner_22

    net = assemble(lattice)
    for event in events:
        pachner_22(net, tuple(event.edge), event.pairing)
    logger.info("replayed %d events", len(net.events))
    return net
