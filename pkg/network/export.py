"""Graph exports: adjacency JSON and Graphviz DOT."""

from __future__ import annotations

import numpy as np

from hyperfoam.conf import hyperfoam_setting
from network.network import SpinNetwork, superlinks
from network.serializers import FoamEventSerializer, GraphExportSerializer


def edge_list(net: SpinNetwork) -> list[tuple[int, int]]:
    """Every edge once, parallel edges repeated, ordered by half-edge (node, slot)."""
    edges = []
    for g in range(net.node_count):
        for s in range(3):
            h, t = int(net.ports[g, s]), int(net.mates[g, s])
            if (g, s) < (h, t):
                edges.append((g, h))
    return edges


def graph_payload(net: SpinNetwork) -> dict:
    T = net.nodes_per_supernode
    kinds = [kind.value for kind in net.template.kinds]
    nodes = [
        {"id": g, "supernode": g // T, "local": g % T, "kind": kinds[g % T], "bit": int(bit)}
        for g, bit in enumerate(np.asarray(net.bits).tolist())
    ]
    payload = {
        "schema_version": hyperfoam_setting("SCHEMA_VERSION"),
        "mode": net.lattice.mode.value,
        "n": net.lattice.n,
        "nodes": nodes,
        "edges": [list(edge) for edge in edge_list(net)],
        "superlinks": [
            {"a": a, "leaf_a": ka, "b": b, "leaf_b": kb} for a, ka, b, kb in superlinks(net)
        ],
    }
    return GraphExportSerializer(payload).data


def graph_dot(net: SpinNetwork) -> str:
    """Undirected multigraph; 3-loop nodes filled, super-link edges dashed."""
    lines = ["graph hyperfoam {", "  node [shape=point];"]
    for g, bit in enumerate(np.asarray(net.bits).tolist()):
        if bit:
            lines.append(f'  n{g} [shape=circle, style=filled, label=""];')
    for g in range(net.node_count):
        for s in range(3):
            h, t = int(net.ports[g, s]), int(net.mates[g, s])
            if (g, s) < (h, t):
                style = " [style=dashed]" if net.labels[g, s] else ""
                lines.append(f"  n{g} -- n{h}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def history_rows(net: SpinNetwork) -> list[dict]:
    return [dict(FoamEventSerializer(event).data) for event in net.events]
