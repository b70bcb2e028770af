"""
Internal trivalent graph of one supernode.

A central triangle c0 c1 c2; each ci roots a binary tree whose root-to-leaf
path spells the leaf code bits b3..b0 (child 0 = lower leaf index). Leaves
with b0 = 1 are expanded into triangles. Every node has exactly three slots:

    central c_β       [c_(β+1), c_(β+2), tree root]
    internal node     [parent, child 0, child 1]
    plain leaf P      [parent, stub, stub]
    triangle t0       [parent, t1, t2]
    triangle t1, t2   [t0, other member, stub]

Stubs (EXT, -1 in the template) are the half-edges a super-link plugs into.
In D4 mode the trees stop one level earlier and only the b0 = 0 leaves exist.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from hyperfoam.exceptions import LatticeError

logger = logging.getLogger(__name__)

EXT = -1
LEAF_COUNT = 48


class Mode(str, Enum):
    F4 = "f4"
    D4 = "d4-toy"


class NodeKind(str, Enum):
    CENTRAL_TRIANGLE = "central"
    INTERNAL = "internal"
    PLAIN_LEAF = "plain_leaf"
    TRIANGLE_LEAF_MEMBER = "triangle_leaf"


@dataclass(frozen=True)
class LeafCode:
    K: int
    b5: int
    b4: int
    b3: int
    b2: int
    b1: int
    b0: int

    @property
    def beta(self) -> int:
        return 2 * self.b5 + self.b4

    @property
    def path(self) -> tuple[int, int, int, int]:
        return (self.b3, self.b2, self.b1, self.b0)

    @property
    def sibling(self) -> int:
        """The leaf sharing this leaf's parent: K±1 flipping b0."""
        return self.K + 1 if self.b0 == 0 else self.K - 1


def leaf_code(K: int) -> LeafCode:
    """Bits of m = K-1; β = 2·b5 + b4 is the branch."""
    if not 1 <= K <= LEAF_COUNT:
        raise LatticeError(f"leaf index {K} outside 1..{LEAF_COUNT}")
    m = K - 1
    return LeafCode(K, *((m >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0)))


def leaf_index(beta: int, b3: int, b2: int, b1: int, b0: int) -> int:
    return 16 * beta + 8 * b3 + 4 * b2 + 2 * b1 + b0 + 1


def leaves_for(mode: Mode) -> tuple[int, ...]:
    if mode is Mode.D4:
        return tuple(K for K in range(1, LEAF_COUNT + 1) if leaf_code(K).b0 == 0)
    return tuple(range(1, LEAF_COUNT + 1))


@dataclass(frozen=True)
class LeafDescriptor:
    K: int
    code: LeafCode
    parent: int
    holder: int  # plain leaf node, or t0 of a triangle
    stubs: tuple[tuple[int, int], tuple[int, int]]
    triangle: tuple[int, int, int] | None = None

    @property
    def is_triangle(self) -> bool:
        return self.triangle is not None


@dataclass(frozen=True)
class SupernodeGraph:
    mode: Mode
    kinds: tuple[NodeKind, ...]
    ports: np.ndarray
    mates: np.ndarray
    stub_labels: np.ndarray
    leaves: dict[int, LeafDescriptor]
    bits: np.ndarray

    @property
    def node_count(self) -> int:
        return len(self.kinds)

    @property
    def stub_count(self) -> int:
        return int((self.ports == EXT).sum())

    def edges(self) -> list[tuple[int, int]]:
        """Internal edges, each once, with multiplicity."""
        found = []
        for u in range(self.node_count):
            for slot in range(3):
                v = int(self.ports[u, slot])
                if v == EXT:
                    continue
                if (u, slot) < (v, int(self.mates[u, slot])):
                    found.append((u, v))
        return found

    def bit(self, node: int) -> int:
        return int(self.bits[node])


class _Builder:
    def __init__(self):
        self.kinds: list[NodeKind] = []
        self.ports: list[list[int]] = []
        self.mates: list[list[int]] = []
        self.labels: list[list[int]] = []

    def add(self, kind: NodeKind) -> int:
        self.kinds.append(kind)
        self.ports.append([EXT, EXT, EXT])
        self.mates.append([EXT, EXT, EXT])
        self.labels.append([0, 0, 0])
        return len(self.kinds) - 1

    def link(self, u: int, su: int, v: int, sv: int):
        if self.ports[u][su] != EXT or self.ports[v][sv] != EXT:
            raise LatticeError(f"slot reused while building supernode: {u}:{su} / {v}:{sv}")
        self.ports[u][su], self.mates[u][su] = v, sv
        self.ports[v][sv], self.mates[v][sv] = u, su


def on_triangle(ports: np.ndarray, node: int, usable=None) -> bool:
    """True iff node lies on a 3-cycle through three distinct nodes.

    `usable(node, slot)` filters which half-edges count (defaults to every
    non-stub slot).
    """

    def neighbours(x: int) -> set[int]:
        out = set()
        for slot in range(3):
            y = int(ports[x, slot])
            if y < 0 or y == x:
                continue
            if usable is not None and not usable(x, slot):
                continue
            out.add(y)
        return out

    around = sorted(neighbours(node))
    for i, u in enumerate(around):
        reach = neighbours(u)
        if any(v in reach for v in around[i + 1:]):
            return True
    return False


def _build_tree(builder: _Builder, central: int, beta: int, depth: int, leaves: dict[int, LeafDescriptor]):
    """Grow one branch; depth is the number of internal levels (4 in F4, 3 in D4)."""
    root = builder.add(NodeKind.INTERNAL)
    builder.link(central, 2, root, 0)
    frontier = [(root, ())]
    for _ in range(depth - 1):
        nxt = []
        for node, prefix in frontier:
            for bit in (0, 1):
                child = builder.add(NodeKind.INTERNAL)
                builder.link(node, 1 + bit, child, 0)
                nxt.append((child, prefix + (bit,)))
        frontier = nxt
    for parent, prefix in frontier:
        for bit in (0, 1):
            path = prefix + (bit,)
            if depth == 3:
                # D4: the last tree bit is b1; b0 is always 0
                b3, b2, b1, b0 = (*path, 0)
            else:
                b3, b2, b1, b0 = path
            K = leaf_index(beta, b3, b2, b1, b0)
            code = leaf_code(K)
            if b0 == 0:
                plain = builder.add(NodeKind.PLAIN_LEAF)
                builder.link(parent, 1 + bit, plain, 0)
                stubs = ((plain, 1), (plain, 2))
                leaves[K] = LeafDescriptor(K, code, parent, plain, stubs)
            else:
                t0 = builder.add(NodeKind.TRIANGLE_LEAF_MEMBER)
                t1 = builder.add(NodeKind.TRIANGLE_LEAF_MEMBER)
                t2 = builder.add(NodeKind.TRIANGLE_LEAF_MEMBER)
                builder.link(parent, 1 + bit, t0, 0)
                builder.link(t0, 1, t1, 0)
                builder.link(t0, 2, t2, 0)
                builder.link(t1, 1, t2, 1)
                stubs = ((t1, 2), (t2, 2))
                leaves[K] = LeafDescriptor(K, code, parent, t0, stubs, (t0, t1, t2))
            for node, slot in stubs:
                builder.labels[node][slot] = K


@lru_cache(maxsize=None)
def build_supernode(mode: Mode = Mode.F4) -> SupernodeGraph:
    """Immutable template; per-supernode state lives in the network."""
    mode = Mode(mode)
    builder = _Builder()
    centrals = [builder.add(NodeKind.CENTRAL_TRIANGLE) for _ in range(3)]
    builder.link(centrals[0], 0, centrals[1], 1)
    builder.link(centrals[1], 0, centrals[2], 1)
    builder.link(centrals[2], 0, centrals[0], 1)
    leaves: dict[int, LeafDescriptor] = {}
    depth = 4 if mode is Mode.F4 else 3
    for beta, central in enumerate(centrals):
        _build_tree(builder, central, beta, depth, leaves)

    ports = np.array(builder.ports, dtype=np.int64)
    mates = np.array(builder.mates, dtype=np.int64)
    labels = np.array(builder.labels, dtype=np.int64)
    bits = np.array([int(on_triangle(ports, node)) for node in range(len(builder.kinds))], dtype=np.int8)
    for array in (ports, mates, labels, bits):
        array.setflags(write=False)

    template = SupernodeGraph(mode, tuple(builder.kinds), ports, mates, labels, dict(sorted(leaves.items())), bits)
    logger.debug(
        "supernode template %s: %d nodes, %d leaves, %d stubs",
        mode.value, template.node_count, len(template.leaves), template.stub_count,
    )
    return template


def bit(template: SupernodeGraph, node: int) -> int:
    """3-cycle membership, recomputed from the adjacency."""
    if not 0 <= node < template.node_count:
        raise LatticeError(f"no node {node} in the supernode")
    return int(on_triangle(template.ports, node))
