from cli.management.base import HyperfoamCommand
from cli.runs import build_spin_network, load_script, output_dir, run_script
from hyperfoam.files import atomic_write_json, atomic_write_text
from network.export import graph_dot, graph_payload


class Command(HyperfoamCommand):
    help = "Export the (optionally evolved) spin network as adjacency JSON and/or Graphviz DOT."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--script", help="move script applied before exporting")
        parser.add_argument("--format", dest="formats", action="append", choices=["json", "dot"])
        parser.add_argument("--dot", action="store_true", help="shorthand for --format dot")

    def run(self, *args, **options):
        formats = list(options.get("formats") or [])
        if options.get("dot"):
            formats.append("dot")
        config = self.config(options, formats=formats or ["json"])
        out = output_dir(config)
        net = build_spin_network(config)
        if config.get("script"):
            run_script(net, load_script(config["script"]))
        written = []
        if "json" in config["formats"]:
            written.append(atomic_write_json(out / "graph.json", graph_payload(net)))
        if "dot" in config["formats"]:
            written.append(atomic_write_text(out / "graph.dot", graph_dot(net)))
        self.stdout.write(" ".join(str(path) for path in written))
