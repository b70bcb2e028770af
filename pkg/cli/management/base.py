import logging

from django.core.management.base import BaseCommand, CommandError

from cli.runs import run_config
from hyperfoam.exceptions import HyperfoamError

logger = logging.getLogger(__name__)


class HyperfoamCommand(BaseCommand):
    """
    Shared flags and error policy: every domain error becomes a CommandError,
    so the process exits nonzero instead of degrading silently.
    """

    lattice_flags = True

    def add_arguments(self, parser):
        if self.lattice_flags:
            parser.add_argument("--n", type=int, help="torus side is 2n (default 3)")
            parser.add_argument("--mode", choices=["f4", "d4-toy", "2d-toy"], help="default f4")
            parser.add_argument("--m", type=int, help="2D toy grid side (default 6)")
            parser.add_argument("--multigraph", action="store_true", help="allow n < 3 (parallel super-links)")
        parser.add_argument("--seed", type=int, help="seed for randomized harnesses only")
        parser.add_argument("--out", help="output directory (default HYPERFOAM_OUT or ./out)")

    def config(self, options, **extra) -> dict:
        keys = ("n", "mode", "m", "seed", "out", "script", "skip_illegal", "multigraph", "defects")
        values = {key: options.get(key) for key in keys}
        values.update(extra)
        return run_config(**values)

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except HyperfoamError as exc:
            logger.error("%s failed: %s", self.__module__.rsplit(".", 1)[-1], exc)
            raise CommandError(str(exc)) from exc

    def run(self, *args, **options):
        raise NotImplementedError
