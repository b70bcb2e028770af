"""Tabular reports handed to the CSV emitters of `measure`."""

from __future__ import annotations

import pandas as pd

from network.network import SpinNetwork, active_leaves
from observables.deflection import DeflectionReport
from observables.frame import supernode_frame
from observables.metric import DistanceField, SphereGrowth


def growth_frame(growth: SphereGrowth) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "radius": list(range(len(growth.balls))),
            "ball": list(growth.balls),
            "shell": list(growth.shells),
        }
    )


def distance_histogram_frame(field: DistanceField) -> pd.DataFrame:
    histogram = field.histogram()
    return pd.DataFrame({"distance": list(histogram), "count": list(histogram.values())})


def _site(site) -> str:
    return "{}:{}:{}".format(*site)


def deflection_frame(report: DeflectionReport) -> pd.DataFrame:
    rows = [
        {
            "a": _site(p.a),
            "b": _site(p.b),
            "before": p.before,
            "after": p.after,
            "delta": p.delta,
            "corridor_distance": report.corridor_distance[(p.a, p.b)],
        }
        for p in report.changed
    ]
    return pd.DataFrame(rows, columns=["a", "b", "before", "after", "delta", "corridor_distance"])


def anisotropy_frame(net: SpinNetwork, supernodes=None) -> pd.DataFrame:
    if supernodes is None:
        supernodes = range(net.lattice.size)
    rows = []
    for supernode in supernodes:
        gram = supernode_frame(net, supernode)
        rows.append(
            {
                "supernode": supernode,
                "active_leaves": len(active_leaves(net, supernode)),
                "trace": str(gram.trace),
                "anisotropy": str(gram.anisotropy),
            }
        )
    return pd.DataFrame(rows, columns=["supernode", "active_leaves", "trace", "anisotropy"])
