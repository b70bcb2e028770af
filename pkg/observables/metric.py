"""
Hop distances and sphere growth.

Growth is fitted as log(ball) against log(r + 1/2), r + 1/2 being the effective
radius of a graph ball of radius r. The plain log r slope is kept alongside it
for comparison; on small radii it reads well below the true exponent.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from hyperfoam.conf import hyperfoam_setting
from hyperfoam.exceptions import LatticeError
from lattice.lattice import Lattice, ball_sizes, frontier_distances
from network.network import SpinNetwork

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DistanceField:
    source: int
    distances: np.ndarray

    def __getitem__(self, node: int) -> int:
        return int(self.distances[node])

    @property
    def reached(self) -> int:
        return int((self.distances >= 0).sum())

    def histogram(self) -> dict[int, int]:
        reached = self.distances[self.distances >= 0]
        counts = np.bincount(reached)
        return {r: int(c) for r, c in enumerate(counts)}


def _table(graph) -> np.ndarray:
    if isinstance(graph, Lattice):
        return graph.neighbors
    if isinstance(graph, SpinNetwork):
        return graph.ports
    raise TypeError(f"cannot measure distances on {type(graph).__name__}")


def bfs_distance(graph: Lattice | SpinNetwork, source: int) -> DistanceField:
    return DistanceField(int(source), frontier_distances(_table(graph), int(source)))


@dataclass(frozen=True)
class SphereGrowth:
    source: int
    balls: tuple[int, ...]
    shells: tuple[int, ...]
    fit_from: int
    slope: float | None
    plain_slope: float | None


def growth_slope(balls, fit_from: int = 2, offset: float = 0.5) -> float | None:
    if fit_from + offset <= 0:
        raise LatticeError("log fit needs positive radii")
    radii = np.arange(fit_from, len(balls), dtype=float)
    if len(radii) < 2:
        return None
    values = np.asarray(balls[fit_from:], dtype=float)
    slope, _ = np.polyfit(np.log(radii + offset), np.log(values), 1)
    return float(slope)


def sphere_growth(lattice: Lattice, source: int = 0, rmax: int | None = None, fit_from: int = 2) -> SphereGrowth:
    """Ball sizes for r = 0..rmax (default n // 2) and the fitted growth exponent."""
    if rmax is None:
        rmax = max(1, lattice.n // 2)
    if rmax < 0:
        raise LatticeError("rmax must be non-negative")
    if rmax > max(1, lattice.n // 2):
        logger.warning("rmax=%d exceeds n/2=%d; torus wraparound will bend the fit", rmax, lattice.n // 2)
    profile = ball_sizes(lattice, source, rmax)
    slope = growth_slope(profile.balls, fit_from)
    plain = growth_slope(profile.balls, fit_from, offset=0.0) if fit_from > 0 else None
    logger.info("sphere growth from %d: balls=%s slope=%s plain=%s", source, profile.balls, slope, plain)
    return SphereGrowth(source, profile.balls, profile.shells, fit_from, slope, plain)


def sphere_growth_many(lattice: Lattice, sources, rmax: int | None = None) -> list[SphereGrowth]:
    """Growth from several sources in a thread pool capped by HYPERFOAM THREADS."""
    sources = [int(s) for s in sources]
    workers = max(1, int(hyperfoam_setting("THREADS")))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: sphere_growth(lattice, s, rmax), sources))
