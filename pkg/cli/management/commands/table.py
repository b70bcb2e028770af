from cli.management.base import HyperfoamCommand
from hyperfoam.files import atomic_write_text, frame_to_markdown
from lattice.holonomy import regenerate_table


class Command(HyperfoamCommand):
    help = "Print the leaf holonomy table (48 rows) as CSV or Markdown."

    lattice_flags = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--format", choices=["csv", "md"], default="md")

    def run(self, *args, **options):
        frame = regenerate_table()
        if options["format"] == "csv":
            text = frame.to_csv(index=False, lineterminator="\n")
        else:
            text = frame_to_markdown(frame)
        if options.get("out"):
            config = self.config(options)
            suffix = "csv" if options["format"] == "csv" else "md"
            atomic_write_text(f"{config['out']}/holonomy_table.{suffix}", text)
        self.stdout.write(text, ending="")
