"""
Pachner 2-2 moves on the trivalent network, and the scripted bit inversion.

For an internal single edge p–q, let a, b be p's other neighbours and c, d
q's, each pair in slot order. Pairing A exchanges b and c, pairing B
exchanges b and d. Either pairing applied twice to the same edge is the
identity, so the restoring move is always the same pairing again.
"""

from __future__ import annotations

import logging

import numpy as np

from hyperfoam.exceptions import MoveRejected
from lattice.supernode import Mode, leaf_code
from network.history import MOVE_KIND, FoamEvent
from network.network import SpinNetwork, assert_trivalent

logger = logging.getLogger(__name__)

PAIRINGS = ("A", "B")


def _slot_towards(net: SpinNetwork, p: int, q: int) -> int:
    slots = [s for s in range(3) if net.ports[p, s] == q]
    if not slots:
        raise MoveRejected(f"{p} and {q} are not adjacent")
    if len(slots) > 1:
        raise MoveRejected(f"edge {p}-{q} is one of a parallel pair")
    return slots[0]


def _other_slots(slot: int) -> list[int]:
    return [s for s in range(3) if s != slot]


def check_move(net: SpinNetwork, edge, pairing: str) -> tuple[int, int, int, int]:
    """Validate a move; returns (p, slot of b at p, q, slot of the exchanged half-edge at q)."""
    if pairing not in PAIRINGS:
        raise MoveRejected(f"unknown pairing {pairing!r}")
    try:
        p, q = (int(x) for x in edge)
    except (TypeError, ValueError):
        raise MoveRejected(f"edge must be a pair of node ids, got {edge!r}") from None
    for node in (p, q):
        if not 0 <= node < net.node_count:
            raise MoveRejected(f"node {node} does not exist")
    if p == q:
        raise MoveRejected("edge endpoints must differ")
    sp = _slot_towards(net, p, q)
    sq = _slot_towards(net, q, p)
    if not net.is_internal(p, sp):
        raise MoveRejected(f"edge {p}-{q} is a super-link edge")
    sb = _other_slots(sp)[1]
    sx = _other_slots(sq)[0 if pairing == "A" else 1]
    return p, sb, q, sx


def _exchange(net: SpinNetwork, p: int, sp: int, q: int, sq: int):
    """Swap the far ends of half-edges (p, sp) and (q, sq)."""
    ports, mates, labels = net.ports, net.mates, net.labels
    b, mb, lb = int(ports[p, sp]), int(mates[p, sp]), int(labels[p, sp])
    c, mc, lc = int(ports[q, sq]), int(mates[q, sq]), int(labels[q, sq])
    ports[p, sp], mates[p, sp], labels[p, sp] = c, mc, lc
    ports[c, mc], mates[c, mc] = p, sp
    ports[q, sq], mates[q, sq], labels[q, sq] = b, mb, lb
    ports[b, mb], mates[b, mb] = q, sq


def pachner_22(net: SpinNetwork, edge, pairing: str) -> FoamEvent:
    """Apply one 2-2 move; rejected moves leave the network untouched."""
    p, sb, q, sx = check_move(net, edge, pairing)
    b, x = int(net.ports[p, sb]), int(net.ports[q, sx])
    touched = sorted({p, q, *(int(v) for v in net.ports[p]), *(int(v) for v in net.ports[q])})
    before = tuple((node, net.bit(node)) for node in touched)

    _exchange(net, p, sb, q, sx)
    net.refresh_bits(touched)
    after = tuple((node, net.bit(node)) for node in touched)

    net.revision += 1
    event = FoamEvent(
        seq=len(net.events),
        edge=(p, q),
        kind=MOVE_KIND,
        pairing=pairing,
        exchanged=(b, x),
        bits_before=before,
        bits_after=after,
    )
    net.events.append(event)
    logger.debug("move %d: edge %d-%d pairing %s exchanged %d/%d", event.seq, p, q, pairing, b, x)
    assert_trivalent(net, f"after move {event.seq}")
    return event


# Node roles of a sibling pair: Y parent of X, X shared parent, P plain leaf, t0..t2 triangle.
_FORWARD_SCRIPT = (("X", "t0", "A"), ("t0", "P", "B"), ("t1", "t2", "A"), ("X", "t1", "A"))

_EXTERNAL = "EXT"

_PRISTINE_PATTERN = {
    "X": ("Y", "P", "t0"),
    "P": ("X", _EXTERNAL, _EXTERNAL),
    "t0": ("X", "t1", "t2"),
    "t1": ("t0", "t2", _EXTERNAL),
    "t2": ("t0", "t1", _EXTERNAL),
}

_SWAPPED_PATTERN = {
    "X": ("Y", "t1", "t2"),
    "P": ("t0", _EXTERNAL, "t1"),
    "t0": ("t1", "P", _EXTERNAL),
    "t1": ("X", "t0", "P"),
    "t2": (_EXTERNAL, "X", _EXTERNAL),
}


def _sibling_roles(net: SpinNetwork, supernode: int, leaf: int) -> dict[str, int]:
    if net.lattice.mode is Mode.D4:
        raise MoveRejected("D4 supernodes have no triangle leaves to migrate")
    code = leaf_code(leaf)
    plain = net.template.leaves[leaf if code.b0 == 0 else code.sibling]
    triangle = net.template.leaves[plain.code.sibling]
    X = plain.parent
    Y = int(net.template.ports[X, 0])
    locals_ = {"Y": Y, "X": X, "P": plain.holder}
    locals_.update(zip(("t0", "t1", "t2"), triangle.triangle))
    return {role: net.global_id(supernode, local) for role, local in locals_.items()}


def _matches(net: SpinNetwork, roles: dict[str, int], pattern) -> bool:
    for role, expected in pattern.items():
        node = roles[role]
        for slot, want in enumerate(expected):
            if want == _EXTERNAL:
                if net.is_internal(node, slot):
                    return False
            elif net.ports[node, slot] != roles[want] or not net.is_internal(node, slot):
                return False
    return True


def invert_bit(net: SpinNetwork, supernode: int, leaf: int) -> list[FoamEvent]:
    """
    Move the triangle between leaf and its sibling, toggling both leaf bits.

    Four 2-2 moves carry the triangle over; running them backwards carries
    it home. Any other local configuration is rejected untouched.
    """
    roles = _sibling_roles(net, supernode, leaf)
    if _matches(net, roles, _PRISTINE_PATTERN):
        script = _FORWARD_SCRIPT
    elif _matches(net, roles, _SWAPPED_PATTERN):
        script = tuple(reversed(_FORWARD_SCRIPT))
    else:
        raise MoveRejected(f"leaf {leaf} of supernode {supernode} is in no scripted configuration")

    events = [pachner_22(net, (roles[p], roles[q]), pairing) for p, q, pairing in script]
    logger.debug("inverted leaf %d of supernode %d in %d moves", leaf, supernode, len(events))
    return events


def legal_edges(net: SpinNetwork) -> np.ndarray:
    """(p, q) for every internal single edge, each orientation listed once with p < q."""
    ports, labels = net.ports, net.labels
    nodes = np.arange(net.node_count)[:, None]
    candidate = (labels == 0) & (ports > nodes)
    # drop parallel pairs
    for s, t in ((0, 1), (0, 2), (1, 2)):
        twin = ports[:, s] == ports[:, t]
        candidate[twin, s] = False
        candidate[twin, t] = False
    p, slot = np.nonzero(candidate)
    return np.stack([p, ports[p, slot]], axis=1)


def random_move(net: SpinNetwork, rng: np.random.Generator) -> FoamEvent:
    edges = legal_edges(net)
    if not len(edges):
        raise MoveRejected("no legal edge left")
    p, q = edges[rng.integers(len(edges))]
    pairing = PAIRINGS[int(rng.integers(2))]
    return pachner_22(net, (int(p), int(q)), pairing)
