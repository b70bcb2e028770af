"""
24-cell vertex shells, their duality, D4 membership and octahedral cells.

Coordinates are integers. The first shell holds the 24 twice-unit Hurwitz
quaternions (norm² 4), the second shell their images under right
multiplication by (1+i) (norm² 8).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from algebra.quat import ExactQuaternion
from hyperfoam.exceptions import LatticeError


class Vec4(NamedTuple):
    c0: int
    c1: int
    c2: int
    c3: int

    def norm2(self) -> int:
        return sum(c * c for c in self)

    def dot(self, other: Vec4) -> int:
        return sum(a * b for a, b in zip(self, other))

    def plus(self, other: Vec4) -> Vec4:
        return Vec4(*(a + b for a, b in zip(self, other)))

    def minus(self, other: Vec4) -> Vec4:
        return Vec4(*(a - b for a, b in zip(self, other)))

    def negated(self) -> Vec4:
        return Vec4(*(-c for c in self))

    def scaled(self, factor: int) -> Vec4:
        return Vec4(*(factor * c for c in self))

    def distance2(self, other: Vec4) -> int:
        return self.minus(other).norm2()


class ShellKind(Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class Shell:
    kind: ShellKind
    vectors: frozenset[Vec4]

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, item) -> bool:
        return Vec4(*item) in self.vectors

    def __iter__(self):
        return iter(sorted(self.vectors))


def vec_to_quat(v: Vec4) -> ExactQuaternion:
    return ExactQuaternion.of(*v)


def quat_to_vec(q: ExactQuaternion) -> Vec4:
    """Integer vector of q; raises ExactnessError when a component is not an integer."""
    return Vec4(*(c.as_integer() for c in q.components))


@lru_cache(maxsize=None)
def first_shell() -> Shell:
    axis = set()
    for position in range(4):
        for sign in (2, -2):
            coords = [0, 0, 0, 0]
            coords[position] = sign
            axis.add(Vec4(*coords))
    halves = {Vec4(*signs) for signs in itertools.product((1, -1), repeat=4)}
    return Shell(ShellKind.FIRST, frozenset(axis | halves))


@lru_cache(maxsize=None)
def second_shell() -> Shell:
    vectors = set()
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            coords = [0, 0, 0, 0]
            coords[i], coords[j] = si, sj
            vectors.add(Vec4(*coords))
    return Shell(ShellKind.SECOND, frozenset(vectors))


ONE_PLUS_I = ExactQuaternion.of(1, 1, 0, 0)


def dual_vector(v: Vec4) -> Vec4:
    """v·(1+i), quaternion right multiplication."""
    return quat_to_vec(vec_to_quat(v) * ONE_PLUS_I)


def verify_duality() -> bool:
    return {dual_vector(v) for v in first_shell()} == set(second_shell().vectors)


def in_d4(v) -> bool:
    parities = {c % 2 for c in v}
    return len(parities) == 1


class KissingReport(NamedTuple):
    min_distance2: int
    contacts: int


def kissing_check() -> KissingReport:
    """Closest approach between first-shell spheres and how many touch the origin's."""
    vectors = sorted(first_shell().vectors)
    min_d2 = min(a.distance2(b) for a, b in itertools.combinations(vectors, 2))
    contacts = sum(1 for v in vectors if v.norm2() == min_d2)
    return KissingReport(min_d2, contacts)


@lru_cache(maxsize=None)
def _cells() -> tuple[tuple[Vec4, frozenset[Vec4]], ...]:
    cells = []
    shell = sorted(first_shell().vectors)
    for d in sorted(second_shell().vectors):
        best = max(v.dot(d) for v in shell)
        cells.append((d, frozenset(v for v in shell if v.dot(d) == best)))
    return tuple(cells)


def cells_of_24cell() -> list[frozenset[Vec4]]:
    """The 24 octahedral cells, one per second-shell direction (sorted order)."""
    return [cell for _, cell in _cells()]


def cell_centers() -> list[Vec4]:
    """Second-shell direction of each cell, aligned with cells_of_24cell()."""
    return [d for d, _ in _cells()]


def _diagonals(cell: frozenset[Vec4]) -> list[tuple[Vec4, Vec4]]:
    vertices = sorted(cell)
    edge = min(a.distance2(b) for a, b in itertools.combinations(vertices, 2))
    return [(a, b) for a, b in itertools.combinations(vertices, 2) if a.distance2(b) == 2 * edge]


def is_octahedron(cell) -> bool:
    """6 vertices, 12 edges of squared length e, 3 diagonals of 2e, each vertex on one diagonal."""
    vertices = sorted(Vec4(*v) for v in cell)
    if len(vertices) != 6:
        return False
    lengths = Counter(a.distance2(b) for a, b in itertools.combinations(vertices, 2))
    if len(lengths) != 2:
        return False
    edge, diagonal = sorted(lengths)
    if diagonal != 2 * edge or lengths[edge] != 12 or lengths[diagonal] != 3:
        return False
    on_diagonal = Counter(v for pair in _diagonals(frozenset(vertices)) for v in pair)
    return all(on_diagonal[v] == 1 for v in vertices)


@dataclass(frozen=True)
class OctahedronSplits:
    """Tetrahedral decompositions of one octahedral cell.

    axis: three alternatives of 4 tetrahedra, one per diagonal used as the shared edge.
    central: 8 tetrahedra coning the faces to the center (center is not a cell vertex).
    """

    axis: tuple[tuple[frozenset[Vec4], ...], ...]
    central: tuple[frozenset[Vec4], ...]
    center: Vec4


def octahedron_splits(cell) -> OctahedronSplits:
    cell = frozenset(Vec4(*v) for v in cell)
    if not is_octahedron(cell):
        raise LatticeError("not an octahedron")
    diagonals = _diagonals(cell)
    axis = []
    for p, q in diagonals:
        equator = sorted(cell - {p, q})
        square_edges = [
            (a, b) for a, b in itertools.combinations(equator, 2)
            if not any({a, b} == {x, y} for x, y in diagonals)
        ]
        axis.append(tuple(frozenset({p, q, a, b}) for a, b in square_edges))
    p, q = diagonals[0]
    center = Vec4(*((a + b) // 2 for a, b in zip(p, q)))
    central = tuple(
        frozenset({center, *face}) for face in itertools.product(*diagonals)
    )
    return OctahedronSplits(tuple(axis), central, center)


def tetrahedra_counts() -> tuple[int, int]:
    """Total tetrahedra over the 24 cells with every cell split by an axis, then centrally."""
    splits = [octahedron_splits(cell) for cell in cells_of_24cell()]
    return sum(len(s.axis[0]) for s in splits), sum(len(s.central) for s in splits)


def shared_octahedron(a, b) -> frozenset[Vec4]:
    """
    Common vertices of the radius-1 cells around two linked D4 nodes.

    The cell around a node c is the 24-cell {c + s/2 : s in the second shell};
    stored in doubled coordinates (2c + s) so every vertex is an integer.
    """
    a, b = Vec4(*a), Vec4(*b)
    if b.minus(a) not in first_shell():
        raise LatticeError(f"{a} and {b} are not linked")
    around_a = {a.scaled(2).plus(s) for s in second_shell().vectors}
    around_b = {b.scaled(2).plus(s) for s in second_shell().vectors}
    return frozenset(around_a & around_b)
