"""
Geodesic deflection on the 2D toy lattice.

Site-to-site distance is the shortest hop count between any node of one site
and any node of the other in the informed graph. Flipping bits expands or
contracts triangles, which lengthens or shortens the geodesics crossing them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from lattice.toy import Site, ToyLattice2D, informed_graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChangedPair:
    a: Site
    b: Site
    before: int
    after: int

    @property
    def delta(self) -> int:
        return self.after - self.before


@dataclass(frozen=True)
class DeflectionReport:
    defects: tuple[Site, ...]
    pair_count: int
    changed: tuple[ChangedPair, ...]
    max_delta: int
    locality_radius: int
    corridor_distance: dict[tuple[Site, Site], int]

    def unchanged_beyond(self, radius: int) -> bool:
        """Every pair whose pristine corridor stays farther than radius from all defects kept its distance."""
        changed = {(p.a, p.b) for p in self.changed}
        return not any(pair in changed for pair, dist in self.corridor_distance.items() if dist > radius)


class _SiteMetric:
    def __init__(self, graph: nx.Graph, sites: list[Site]):
        order = list(graph.nodes)
        self.index = {node: i for i, node in enumerate(order)}
        self.nodes = np.asarray(nx.floyd_warshall_numpy(graph, nodelist=order), dtype=float)
        grouped: dict[Site, list[int]] = {}
        for node, data in graph.nodes(data=True):
            grouped.setdefault(data["site"], []).append(self.index[node])
        self.members = {site: np.array(sorted(ix)) for site, ix in grouped.items()}
        self.sites = sites
        self.matrix = np.array(
            [[self.nodes[np.ix_(self.members[a], self.members[b])].min() for b in sites] for a in sites]
        ).astype(int)

    def corridor(self, a: Site, b: Site) -> np.ndarray:
        """Node indices on some shortest path between the two sites."""
        target = self.matrix[self.sites.index(a), self.sites.index(b)]
        on_path = np.zeros(len(self.nodes), dtype=bool)
        for i in self.members[a]:
            for j in self.members[b]:
                on_path |= self.nodes[i] + self.nodes[:, j] == target
        return np.nonzero(on_path)[0]


def geodesic_deflection(toy: ToyLattice2D, defects=()) -> DeflectionReport:
    defects = tuple(sorted({toy.check_site(s) for s in defects}))
    sites = toy.sites
    pristine = _SiteMetric(informed_graph(toy), sites)
    defected = _SiteMetric(informed_graph(toy, defects), sites)

    changed = []
    for i, a in enumerate(sites):
        for j in range(i + 1, len(sites)):
            before, after = int(pristine.matrix[i, j]), int(defected.matrix[i, j])
            if before != after:
                changed.append(ChangedPair(a, sites[j], before, after))

    # all pairs, changed or not
    corridor_distance = {}
    if defects:
        defect_nodes = np.concatenate([pristine.members[s] for s in defects])
        for i, a in enumerate(sites):
            for b in sites[i + 1:]:
                corridor = pristine.corridor(a, b)
                corridor_distance[(a, b)] = int(pristine.nodes[np.ix_(defect_nodes, corridor)].min())

    report = DeflectionReport(
        defects=defects,
        pair_count=len(sites) * (len(sites) - 1) // 2,
        changed=tuple(changed),
        max_delta=max((abs(p.delta) for p in changed), default=0),
        locality_radius=max((corridor_distance[(p.a, p.b)] for p in changed), default=0),
        corridor_distance=corridor_distance,
    )
    logger.info(
        "deflection m=%d defects=%d: %d/%d pairs changed, max |Δd|=%d, radius %d",
        toy.m, len(defects), len(changed), report.pair_count, report.max_delta, report.locality_radius,
    )
    return report
