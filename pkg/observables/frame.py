"""
Flat-frame check for a supernode: Gram matrix of its active leaf directions.

G = Σ_K w_K · dir(K) dir(K)ᵀ. The pristine supernode gives 72·I; anisotropy is
the largest deviation of an entry from (tr G / 4)·δ_ij.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from lattice.holonomy import leaf_direction
from lattice.supernode import LEAF_COUNT
from network.network import SpinNetwork, active_leaves


@dataclass(frozen=True)
class FrameGram:
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def trace(self) -> Fraction:
        return sum((self.matrix[i][i] for i in range(4)), Fraction(0))

    @property
    def anisotropy(self) -> Fraction:
        mean = self.trace / 4
        return max(
            abs(self.matrix[i][j] - (mean if i == j else 0)) for i in range(4) for j in range(4)
        )

    @property
    def is_isotropic(self) -> bool:
        return self.anisotropy == 0

    def is_symmetric(self) -> bool:
        return all(self.matrix[i][j] == self.matrix[j][i] for i in range(4) for j in range(4))

    def as_floats(self) -> list[list[float]]:
        return [[float(v) for v in row] for row in self.matrix]


def emergent_frame(active: Iterable[int] | Mapping[int, Fraction | int] | None = None) -> FrameGram:
    """
    Gram matrix over the active leaves.

    `active` is a set of leaves (weight 1 each), a leaf → weight mapping, or
    None for all 48 leaves.
    """
    if active is None:
        weights = {K: Fraction(1) for K in range(1, LEAF_COUNT + 1)}
    elif isinstance(active, Mapping):
        weights = {int(K): Fraction(w) for K, w in active.items()}
    else:
        weights = {int(K): Fraction(1) for K in active}
    gram = [[Fraction(0)] * 4 for _ in range(4)]
    for K, weight in weights.items():
        d = leaf_direction(K)
        for i in range(4):
            for j in range(4):
                gram[i][j] += weight * d[i] * d[j]
    return FrameGram(tuple(tuple(row) for row in gram))


def supernode_frame(net: SpinNetwork, supernode: int) -> FrameGram:
    return emergent_frame(active_leaves(net, supernode))
