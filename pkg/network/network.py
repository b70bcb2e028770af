"""
Global trivalent spin network.

Half-edge storage, one row per node and one column per slot:

    ports[g, s]   node at the other end of slot s of node g
    mates[g, s]   slot index of that half-edge at the other end
    labels[g, s]  0 for supernode-internal edges, else the leaf K owning the
                  super-link half-edge on this side

Global node id = supernode · T + local id, T = nodes per supernode template.
Labels move with their half-edge when a Pachner move rewires it, so the
super-link pairing (the lattice geometry) never changes.
"""

from __future__ import annotations

import hashlib
import logging
from collections import Counter
from typing import TYPE_CHECKING

import numpy as np

from hyperfoam.conf import hyperfoam_setting
from hyperfoam.exceptions import AssemblyError, InvariantViolation, LatticeError
from lattice.holonomy import opposite_leaf, require_direction_bijection
from lattice.lattice import Lattice, build_lattice
from lattice.supernode import EXT, SupernodeGraph, build_supernode, leaf_code

if TYPE_CHECKING:
    from network.history import FoamEvent

logger = logging.getLogger(__name__)


class SpinNetwork:
    def __init__(self, lattice: Lattice, template: SupernodeGraph, ports, mates, labels):
        self.lattice = lattice
        self.template = template
        self.ports: np.ndarray = ports
        self.mates: np.ndarray = mates
        self.labels: np.ndarray = labels
        self.bits: np.ndarray = np.zeros(len(ports), dtype=np.int8)
        self.revision = 0
        self.events: list[FoamEvent] = []

    @property
    def nodes_per_supernode(self) -> int:
        return self.template.node_count

    @property
    def node_count(self) -> int:
        return int(self.ports.shape[0])

    @property
    def edge_count(self) -> int:
        return int((self.ports >= 0).sum()) // 2

    @property
    def superlink_count(self) -> int:
        """Each super-link is two parallel edges, i.e. four labelled half-edges."""
        return int((self.labels > 0).sum()) // 4

    def supernode_of(self, node: int) -> int:
        return int(node) // self.nodes_per_supernode

    def local_of(self, node: int) -> int:
        return int(node) % self.nodes_per_supernode

    def global_id(self, supernode: int, local: int) -> int:
        if not 0 <= supernode < self.lattice.size:
            raise LatticeError(f"supernode {supernode} outside 0..{self.lattice.size - 1}")
        return supernode * self.nodes_per_supernode + local

    def is_internal(self, node: int, slot: int) -> bool:
        return self.labels[node, slot] == 0

    def internal_neighbours(self, node: int) -> list[int]:
        return [int(self.ports[node, s]) for s in range(3) if self.labels[node, s] == 0 and self.ports[node, s] >= 0]

    def bit(self, node: int) -> int:
        return int(self.bits[node])

    def compute_bit(self, node: int) -> int:
        """3-cycle membership over supernode-internal edges."""
        around = sorted({x for x in self.internal_neighbours(node) if x != node})
        for i, u in enumerate(around):
            reach = set(self.internal_neighbours(u))
            if any(v in reach for v in around[i + 1:]):
                return 1
        return 0

    def refresh_bits(self, nodes=None):
        if nodes is None:
            nodes = range(self.node_count)
        for node in nodes:
            self.bits[node] = self.compute_bit(int(node))

    def copy(self) -> SpinNetwork:
        twin = SpinNetwork(self.lattice, self.template, self.ports.copy(), self.mates.copy(), self.labels.copy())
        twin.bits = self.bits.copy()
        twin.revision = self.revision
        twin.events = list(self.events)
        return twin


def _tile(template: SupernodeGraph, count: int):
    T = template.node_count
    offsets = (np.arange(count, dtype=np.int64) * T)[:, None, None]
    ports = np.broadcast_to(template.ports, (count, T, 3))
    ports = np.where(ports >= 0, ports + offsets, EXT).reshape(count * T, 3)
    mates = np.tile(template.mates, (count, 1))
    labels = np.tile(template.stub_labels, (count, 1))
    return ports.astype(np.int64), mates.astype(np.int64), labels.astype(np.int64)


def assemble(lattice: Lattice) -> SpinNetwork:
    """
    Wire every supernode's leaf K to leaf opposite(K) of the neighbour in
    direction K: stub 1 to stub 1, stub 2 to stub 2.
    """
    require_direction_bijection()
    template = build_supernode(lattice.mode)
    T = template.node_count
    ports, mates, labels = _tile(template, lattice.size)
    sites = np.arange(lattice.size, dtype=np.int64)

    for K in lattice.leaves:
        opposite = opposite_leaf(K)
        there = lattice.neighbors[:, lattice.column(K)]
        # each unordered pair (A, K) ~ (B, K') is wired once, from its smaller side
        here_first = sites * 64 + K < there * 64 + opposite
        A, B = sites[here_first], there[here_first]
        for stub in (0, 1):
            local_a, slot_a = template.leaves[K].stubs[stub]
            local_b, slot_b = template.leaves[opposite].stubs[stub]
            ga, gb = A * T + local_a, B * T + local_b
            if (ports[ga, slot_a] != EXT).any() or (ports[gb, slot_b] != EXT).any():
                raise AssemblyError(f"stub of leaf {K} or {opposite} used twice")
            ports[ga, slot_a], mates[ga, slot_a] = gb, slot_b
            ports[gb, slot_b], mates[gb, slot_b] = ga, slot_a

    if (ports == EXT).any():
        raise AssemblyError(f"{int((ports == EXT).sum())} stubs left unconnected")

    net = SpinNetwork(lattice, template, ports, mates, labels)
    net.bits = np.tile(template.bits, lattice.size).astype(np.int8)
    if not check_trivalent(net):
        raise InvariantViolation("assembled network is not 3-regular")
    logger.info(
        "assembled %d supernodes: %d nodes, %d edges, %d super-links",
        lattice.size, net.node_count, net.edge_count, net.superlink_count,
    )
    return net


def build_network(n: int, mode="f4", multigraph: bool = False) -> SpinNetwork:
    return assemble(build_lattice(n, mode=mode, multigraph=multigraph))


def check_trivalent(net: SpinNetwork) -> bool:
    """Every slot is wired, and every half-edge points back at itself."""
    ports, mates = net.ports, net.mates
    if (ports < 0).any() or (ports >= net.node_count).any():
        return False
    if (mates < 0).any() or (mates > 2).any():
        return False
    nodes = np.arange(net.node_count)[:, None]
    slots = np.arange(3)[None, :]
    back = ports[ports, mates]
    back_slot = mates[ports, mates]
    return bool((back == nodes).all() and (back_slot == slots).all())


def assert_trivalent(net: SpinNetwork, context: str = ""):
    if hyperfoam_setting("DEBUG_INVARIANTS") and not check_trivalent(net):
        logger.error("3-regularity lost %s", context)
        raise InvariantViolation(f"network is no longer 3-regular {context}".strip())


def leaf_holders(net: SpinNetwork, supernode: int, K: int) -> list[int]:
    """Nodes of the supernode that currently hold a half-edge of leaf K's super-link."""
    start = net.global_id(supernode, 0)
    block = net.labels[start:start + net.nodes_per_supernode]
    return sorted({start + int(local) for local in np.nonzero((block == K).any(axis=1))[0]})


def leaf_bit(net: SpinNetwork, supernode: int, K: int) -> int:
    """1 when every holder of leaf K sits on a 3-loop."""
    holders = leaf_holders(net, supernode, K)
    if not holders:
        raise LatticeError(f"leaf {K} is not wired in supernode {supernode}")
    return int(all(net.bits[g] for g in holders))


def active_leaves(net: SpinNetwork, supernode: int) -> list[int]:
    """Leaves whose bit still matches the pristine one (b0)."""
    return [K for K in net.lattice.leaves if leaf_bit(net, supernode, K) == leaf_code(K).b0]


def state_hash(net: SpinNetwork) -> str:
    digest = hashlib.sha256()
    for array in (net.ports, net.mates, net.labels, net.bits):
        digest.update(np.ascontiguousarray(array, dtype=np.int64).tobytes())
    return digest.hexdigest()


def superlink_census(net: SpinNetwork) -> Counter:
    """Super-link edges per (supernode, supernode) pair; invariant under every move."""
    census: Counter = Counter()
    nodes, slots = np.nonzero(net.labels > 0)
    for g, s in zip(nodes.tolist(), slots.tolist()):
        h, t = int(net.ports[g, s]), int(net.mates[g, s])
        if (g, s) < (h, t):
            a, b = sorted((net.supernode_of(g), net.supernode_of(h)))
            census[(a, b)] += 1
    return census


def superlinks(net: SpinNetwork) -> list[tuple[int, int, int, int]]:
    """(A, K, B, K') per super-link, A·64+K < B·64+K'."""
    found = set()
    nodes, slots = np.nonzero(net.labels > 0)
    for g, s in zip(nodes.tolist(), slots.tolist()):
        h, t = int(net.ports[g, s]), int(net.mates[g, s])
        here = (net.supernode_of(g), int(net.labels[g, s]))
        there = (net.supernode_of(h), int(net.labels[h, t]))
        first, second = sorted((here, there), key=lambda pair: pair[0] * 64 + pair[1])
        found.add((*first, *second))
    return sorted(found)
