import json
from pathlib import Path

from cli.management.base import HyperfoamCommand
from cli.runs import ConfigError
from particles.charges import Root8, classify
from particles.serializers import ParticleRecordSerializer


class Command(HyperfoamCommand):
    help = "Decode electric and color charge of e8 roots given as 8 integers each (use -- before negatives)."

    def add_arguments(self, parser):
        parser.add_argument("coords", nargs="*", help="root coordinates, 8 per root")
        parser.add_argument("--file", help="JSON list of roots, or a fixture file with a 'rows' list")
        parser.add_argument("--format", choices=["text", "json"], default="text")

    def _roots(self, options) -> list[Root8]:
        roots = []
        coords = options.get("coords") or []
        if len(coords) % 8:
            raise ConfigError(f"{len(coords)} coordinates given; roots have 8 each")
        for start in range(0, len(coords), 8):
            roots.append(Root8.of(coords[start:start + 8]))
        if options.get("file"):
            path = Path(options["file"])
            if not path.exists():
                raise ConfigError(f"{path} does not exist")
            roots.extend(self._file_roots(path))
        if not roots:
            raise ConfigError("no roots given")
        return roots

    @staticmethod
    def _file_roots(path: Path) -> list[Root8]:
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
        rows = payload.get("rows") if isinstance(payload, dict) else payload
        if not isinstance(rows, list):
            raise ConfigError(f"{path}: expected a list of roots or an object with a 'rows' list")
        roots = []
        for i, row in enumerate(rows):
            if isinstance(row, dict):
                if "root" not in row:
                    raise ConfigError(f"{path}: row {i} has no 'root'")
                row = row["root"]
            if not isinstance(row, list):
                raise ConfigError(f"{path}: row {i} is not a list of 8 integers")
            roots.append(Root8.of(row))
        return roots

    def run(self, *args, **options):
        records = [classify(root) for root in self._roots(options)]
        if options["format"] == "json":
            data = [dict(ParticleRecordSerializer(record).data) for record in records]
            self.stdout.write(json.dumps(data, sort_keys=True, indent=2))
            return
        for record in records:
            self.stdout.write(record.summary())
            if record.note:
                self.stdout.write(f"  note: {record.note}")
