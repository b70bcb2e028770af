"""
2D toy model: a square m×m torus cut by one diagonal per cell.

Dual sites are triangles (row, col, h), h = 0 for the lower and 1 for the
upper triangle of a cell. A lower triangle touches the upper triangles of its
own cell, of the cell above and of the cell to the right; slot j of a site
faces slot j of its neighbour. Bits follow the checkerboard (row + col) % 2.

The informed graph replaces each bit-1 site by a triangle of three nodes, one
per slot, so 3-loops carry the bit exactly as in the 4D supernodes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx

from hyperfoam.exceptions import LatticeError

logger = logging.getLogger(__name__)

Site = tuple[int, int, int]


def site_neighbours(site: Site, m: int) -> tuple[Site, Site, Site]:
    r, c, h = site
    if h == 0:
        return ((r, c, 1), ((r - 1) % m, c, 1), (r, (c + 1) % m, 1))
    return ((r, c, 0), ((r + 1) % m, c, 0), (r, (c - 1) % m, 0))


@dataclass(frozen=True, eq=False)
class ToyLattice2D:
    m: int
    graph: nx.Graph
    bits: dict[Site, int]

    @property
    def sites(self) -> list[Site]:
        return sorted(self.graph.nodes)

    @property
    def triangle_count(self) -> int:
        return self.graph.number_of_nodes()

    def check_site(self, site) -> Site:
        site = tuple(site)
        if site not in self.bits:
            raise LatticeError(f"{site} is not a site of the m={self.m} toy lattice")
        return site


def build_toy_2d(m: int) -> ToyLattice2D:
    if not isinstance(m, int) or m < 3:
        raise LatticeError(f"toy lattice needs m >= 3, got {m!r}")
    graph = nx.Graph()
    bits = {}
    for r in range(m):
        for c in range(m):
            for h in (0, 1):
                bits[(r, c, h)] = (r + c) % 2
                graph.add_node((r, c, h), bit=bits[(r, c, h)])
    for r in range(m):
        for c in range(m):
            for other in site_neighbours((r, c, 0), m):
                graph.add_edge((r, c, 0), other)
    logger.debug("toy lattice m=%d: %d dual nodes", m, graph.number_of_nodes())
    return ToyLattice2D(m, graph, bits)


def informed_graph(toy: ToyLattice2D, flipped=()) -> nx.Graph:
    """
    Trivalent graph of the toy state with `flipped` sites' bits inverted.

    Nodes are (row, col, h, slot); a bit-0 site is the single node with slot 0.
    Every node carries its `site`.
    """
    flipped = {toy.check_site(s) for s in flipped}
    bits = {s: b ^ (s in flipped) for s, b in toy.bits.items()}

    def facing(site: Site, slot: int):
        return (*site, slot if bits[site] else 0)

    graph = nx.Graph()
    for site, b in bits.items():
        members = [facing(site, slot) for slot in range(3)] if b else [facing(site, 0)]
        for node in members:
            graph.add_node(node, site=site)
        if b:
            graph.add_edges_from([(members[0], members[1]), (members[1], members[2]), (members[2], members[0])])
    for r in range(toy.m):
        for c in range(toy.m):
            site = (r, c, 0)
            for slot, other in enumerate(site_neighbours(site, toy.m)):
                graph.add_edge(facing(site, slot), facing(other, slot))
    return graph
