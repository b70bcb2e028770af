from cli.management.base import HyperfoamCommand
from cli.runs import build_spin_network, fuzz, load_script, output_dir, run_script
from hyperfoam.conf import hyperfoam_setting
from hyperfoam.files import atomic_write_json, atomic_write_jsonl
from network.export import history_rows
from network.network import state_hash


class Command(HyperfoamCommand):
    help = (
        "Run a move script ({supernode, leaf} inversions and {edge, pairing} moves, JSON list or "
        "JSON lines) and write history.jsonl plus the final state hash."
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--script", help="move script; a history.jsonl file replays it")
        parser.add_argument("--skip-illegal", action="store_true", help="log and skip rejected entries")
        parser.add_argument("--random-moves", type=int, default=0, help="legal random moves after the script")

    def run(self, *args, **options):
        config = self.config(options)
        out = output_dir(config)
        net = build_spin_network(config)
        pristine = state_hash(net)
        entries = load_script(config["script"]) if config.get("script") else []
        outcome = run_script(net, entries, skip_illegal=config["skip_illegal"])
        if options.get("random_moves"):
            fuzz(net, options["random_moves"], config["seed"])

        final = state_hash(net)
        atomic_write_jsonl(out / "history.jsonl", history_rows(net))
        atomic_write_json(
            out / "final_state.json",
            {
                "schema_version": hyperfoam_setting("SCHEMA_VERSION"),
                "pristine_hash": pristine,
                "state_hash": final,
                "events": len(net.events),
                "revision": net.revision,
                "applied_entries": outcome.applied,
                "skipped": outcome.skipped,
            },
        )
        self.stdout.write(f"events={len(net.events)} state_hash={final}")
