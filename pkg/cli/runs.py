"""
Run plumbing shared by the management commands: config validation, network
construction, move scripts and manifests.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from cli.serializers import ManifestSerializer, RunConfigSerializer
from hyperfoam.conf import hyperfoam_setting
from hyperfoam.exceptions import HyperfoamError, MoveRejected
from lattice.holonomy import direction_bijection_check
from lattice.lattice import build_lattice
from lattice.toy import build_toy_2d, informed_graph
from network.moves import invert_bit, pachner_22, random_move
from network.network import SpinNetwork, assemble, check_trivalent, state_hash
from network.serializers import MoveScriptEntrySerializer

logger = logging.getLogger(__name__)


class ConfigError(HyperfoamError):
    """Invalid run configuration or script file."""


def run_config(**options) -> dict:
    serializer = RunConfigSerializer(data={k: v for k, v in options.items() if v is not None})
    if not serializer.is_valid():
        raise ConfigError(_flatten(serializer.errors))
    return dict(serializer.validated_data)


def _flatten(errors) -> str:
    if isinstance(errors, dict):
        return "; ".join(f"{key}: {_flatten(value)}" for key, value in errors.items())
    if isinstance(errors, list):
        return ", ".join(_flatten(e) for e in errors)
    return str(errors)


def output_dir(config: dict) -> Path:
    path = Path(config["out"])
    path.mkdir(parents=True, exist_ok=True)
    return path


def build_spin_network(config: dict) -> SpinNetwork:
    if config["mode"] == "2d-toy":
        raise ConfigError("the 2d-toy mode has no spin network of supernodes; use --mode f4 or d4-toy")
    return assemble(build_lattice(config["n"], mode=config["mode"], multigraph=config["multigraph"]))


def manifest(config: dict, net: SpinNetwork | None = None) -> dict:
    schema_version = hyperfoam_setting("SCHEMA_VERSION")
    if net is None:
        toy = build_toy_2d(config["m"])
        informed = informed_graph(toy)
        payload = {
            "schema_version": schema_version,
            "mode": "2d-toy",
            "m": toy.m,
            "nodes": toy.graph.number_of_nodes(),
            "edges": toy.graph.number_of_edges(),
            "triangles": toy.triangle_count,
            "informed_nodes": informed.number_of_nodes(),
            "direction_bijection": direction_bijection_check(),
            "trivalent": all(d == 3 for _, d in toy.graph.degree()),
        }
    else:
        payload = {
            "schema_version": schema_version,
            "mode": net.lattice.mode.value,
            "n": net.lattice.n,
            "multigraph": net.lattice.multigraph,
            "supernodes": net.lattice.size,
            "nodes": net.node_count,
            "edges": net.edge_count,
            "superlinks": net.superlink_count,
            "direction_bijection": direction_bijection_check(),
            "trivalent": check_trivalent(net),
            "state_hash": state_hash(net),
        }
    return dict(ManifestSerializer(payload).data)


@dataclass
class ScriptEntry:
    line: int
    data: dict


def load_script(path: str | Path) -> list[ScriptEntry]:
    """A JSON list of entries, or JSON lines (one entry per line, history files included)."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"script {path} does not exist")
    text = path.read_text(encoding="utf-8")
    if text.lstrip().startswith("["):
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"script {path}: {exc}") from None
        raw = [(index + 1, row) for index, row in enumerate(rows)]
    else:
        raw = []
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                raw.append((number, json.loads(line)))
            except json.JSONDecodeError as exc:
                raise ConfigError(f"script line {number}: {exc}") from None

    entries = []
    for number, row in raw:
        serializer = MoveScriptEntrySerializer(data=row)
        if not serializer.is_valid():
            raise ConfigError(f"script line {number}: {_flatten(serializer.errors)}")
        entries.append(ScriptEntry(number, dict(serializer.validated_data)))
    return entries


@dataclass
class ScriptOutcome:
    applied: int = 0
    skipped: list[dict] = field(default_factory=list)


def run_script(net: SpinNetwork, entries: list[ScriptEntry], skip_illegal: bool = False) -> ScriptOutcome:
    outcome = ScriptOutcome()
    for entry in entries:
        data = entry.data
        try:
            if "edge" in data:
                pachner_22(net, tuple(data["edge"]), data["pairing"])
            else:
                invert_bit(net, data["supernode"], data["leaf"])
        except HyperfoamError as exc:
            if not skip_illegal:
                raise MoveRejected(f"script line {entry.line}: {exc}") from exc
            logger.warning("skipping script line %d: %s", entry.line, exc)
            outcome.skipped.append({"line": entry.line, "reason": str(exc)})
            continue
        outcome.applied += 1
    return outcome


def fuzz(net: SpinNetwork, moves: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    for _ in range(moves):
        random_move(net, rng)
