from cli.management.base import HyperfoamCommand
from cli.runs import build_spin_network, manifest, output_dir
from hyperfoam.files import atomic_write_json, atomic_write_text
from network.export import graph_dot, graph_payload


class Command(HyperfoamCommand):
    help = "Build a lattice and its spin network; write the graph export and a manifest with counts."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--format", dest="formats", action="append", choices=["json", "dot"])
        parser.add_argument("--no-graph", action="store_true", help="write the manifest only")

    def run(self, *args, **options):
        config = self.config(options, formats=options.get("formats") or ["json"])
        out = output_dir(config)
        if config["mode"] == "2d-toy":
            payload = manifest(config)
        else:
            net = build_spin_network(config)
            payload = manifest(config, net)
            if not options.get("no_graph"):
                if "json" in config["formats"]:
                    atomic_write_json(out / "graph.json", graph_payload(net))
                if "dot" in config["formats"]:
                    atomic_write_text(out / "graph.dot", graph_dot(net))
        atomic_write_json(out / "manifest.json", payload)
        summary = ", ".join(f"{key}={payload[key]}" for key in ("mode", "supernodes", "nodes", "edges") if key in payload)
        self.stdout.write(summary)
