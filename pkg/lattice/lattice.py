"""
T⁴ torus of supernodes on the F4 lattice.

Sites are 4-tuples of residues mod 2n with all coordinates of the same parity.
Dense ids: id = parity·n⁴ + base-n digits of (coordinate // 2). Each site gets
one neighbour per leaf direction (48 in F4, the 24 first-shell ones in D4),
stored column-by-column in leaf order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from hyperfoam.exceptions import LatticeError
from lattice.holonomy import leaf_direction, opposite_leaf, require_direction_bijection
from lattice.supernode import Mode, leaves_for

logger = logging.getLogger(__name__)

MIN_SIMPLE_N = 3


@dataclass(frozen=True)
class TorusShape:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise LatticeError(f"torus n must be a positive integer, got {self.n!r}")

    @property
    def side(self) -> int:
        return 2 * self.n

    @property
    def supernode_count(self) -> int:
        return 2 * self.n**4


@dataclass(frozen=True, eq=False)
class Lattice:
    shape: TorusShape
    mode: Mode
    multigraph: bool
    leaves: tuple[int, ...]
    directions: np.ndarray
    neighbors: np.ndarray
    _columns: dict[int, int] = field(repr=False)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def size(self) -> int:
        return self.shape.supernode_count

    @property
    def degree(self) -> int:
        return len(self.leaves)

    def column(self, K: int) -> int:
        try:
            return self._columns[K]
        except KeyError:
            raise LatticeError(f"leaf {K} is not a lattice direction in {self.mode.value} mode") from None

    def coord(self, site: int) -> tuple[int, int, int, int]:
        return tuple(int(c) for c in decode_ids(self.shape, np.array([self._checked(site)]))[0])

    def site(self, coord) -> int:
        coord = np.asarray(coord, dtype=np.int64) % self.shape.side
        if len({int(c) % 2 for c in coord}) != 1:
            raise LatticeError(f"{tuple(coord)} mixes parities")
        return int(encode_coords(self.shape, coord[None, :])[0])

    def neighbor(self, site: int, K: int) -> int:
        return int(self.neighbors[self._checked(site), self.column(K)])

    def _checked(self, site: int) -> int:
        if not 0 <= site < self.size:
            raise LatticeError(f"supernode {site} outside 0..{self.size - 1}")
        return site


def encode_coords(shape: TorusShape, coords: np.ndarray) -> np.ndarray:
    n = shape.n
    coords = np.asarray(coords, dtype=np.int64) % shape.side
    parity = coords[:, 0] % 2
    half = coords // 2
    digits = ((half[:, 0] * n + half[:, 1]) * n + half[:, 2]) * n + half[:, 3]
    return parity * n**4 + digits


def decode_ids(shape: TorusShape, ids: np.ndarray) -> np.ndarray:
    n = shape.n
    ids = np.asarray(ids, dtype=np.int64)
    parity, rest = np.divmod(ids, n**4)
    half = np.empty((len(ids), 4), dtype=np.int64)
    for axis in (3, 2, 1, 0):
        rest, half[:, axis] = np.divmod(rest, n)
    return 2 * half + parity[:, None]


def build_lattice(shape: TorusShape | int, mode: Mode = Mode.F4, multigraph: bool = False) -> Lattice:
    if isinstance(shape, int):
        shape = TorusShape(shape)
    mode = Mode(mode)
    if shape.n < MIN_SIMPLE_N and not multigraph:
        raise LatticeError(
            f"n={shape.n} gives parallel super-links; use n >= {MIN_SIMPLE_N} or enable multigraph mode"
        )
    require_direction_bijection()

    leaves = leaves_for(mode)
    directions = np.array([leaf_direction(K) for K in leaves], dtype=np.int64)
    ids = np.arange(shape.supernode_count, dtype=np.int64)
    coords = decode_ids(shape, ids)
    neighbors = np.empty((len(ids), len(leaves)), dtype=np.int64)
    for column, step in enumerate(directions):
        neighbors[:, column] = encode_coords(shape, coords + step)
    neighbors.setflags(write=False)
    directions.setflags(write=False)

    lattice = Lattice(
        shape=shape,
        mode=mode,
        multigraph=multigraph,
        leaves=leaves,
        directions=directions,
        neighbors=neighbors,
        _columns={K: column for column, K in enumerate(leaves)},
    )
    logger.info("lattice n=%d (%s): %d supernodes, degree %d", shape.n, mode.value, lattice.size, lattice.degree)
    return lattice


def opposite_columns(lattice: Lattice) -> np.ndarray:
    """column of opposite_leaf(K) for each column K."""
    return np.array([lattice.column(opposite_leaf(K)) for K in lattice.leaves], dtype=np.int64)


def frontier_distances(table: np.ndarray, source: int, rmax: int | None = None, target: int | None = None) -> np.ndarray:
    """
    Hop distances from source over a (nodes, degree) neighbour table.

    Negative entries are missing half-edges. Unreached nodes stay at -1. The
    search stops after radius rmax, or once target has been reached.
    """
    count = table.shape[0]
    if not 0 <= source < count:
        raise LatticeError(f"node {source} outside 0..{count - 1}")
    distances = np.full(count, -1, dtype=np.int64)
    distances[source] = 0
    frontier = np.array([source], dtype=np.int64)
    radius = 0
    while frontier.size:
        if target is not None and distances[target] >= 0:
            break
        if rmax is not None and radius >= rmax:
            break
        reached = table[frontier].ravel()
        reached = np.unique(reached[reached >= 0])
        reached = reached[distances[reached] < 0]
        radius += 1
        distances[reached] = radius
        frontier = reached
    return distances


def word_distance(lattice: Lattice, a: int, b: int) -> int:
    lattice._checked(a)
    lattice._checked(b)
    distances = frontier_distances(lattice.neighbors, a, target=b)
    return int(distances[b])


@dataclass(frozen=True)
class BallProfile:
    source: int
    balls: tuple[int, ...]
    shells: tuple[int, ...]


def ball_sizes(lattice: Lattice, source: int, rmax: int) -> BallProfile:
    distances = frontier_distances(lattice.neighbors, lattice._checked(source), rmax=rmax)
    shells = np.bincount(distances[distances >= 0], minlength=rmax + 1)[: rmax + 1]
    balls = np.cumsum(shells)
    return BallProfile(source, tuple(int(b) for b in balls), tuple(int(s) for s in shells))
