"""
Run configuration, move scripts and atomic output files.
"""
import json

import pandas as pd
import pytest

from cli.runs import ConfigError, load_script, manifest, run_config, run_script
from hyperfoam.conf import hyperfoam_setting
from hyperfoam.exceptions import MoveRejected
from hyperfoam.files import atomic_write_csv, atomic_write_json, atomic_write_jsonl, frame_to_markdown
from network.network import state_hash


class TestRunConfig:
    def test_defaults(self):
        config = run_config(out="somewhere")
        assert (config["n"], config["mode"], config["m"], config["seed"]) == (3, "f4", 6, 0)
        assert config["multigraph"] is False

    def test_default_output_directory(self):
        assert run_config()["out"] == hyperfoam_setting("DEFAULT_OUTPUT_DIR")

    def test_defects_are_parsed(self):
        assert run_config(defects=["1:2:0", "3,4,1"])["defects"] == [(1, 2, 0), (3, 4, 1)]

    @pytest.mark.parametrize("options, message", [
        ({"n": 2}, "multigraph"),
        ({"mode": "e8"}, "mode"),
        ({"defects": ["1:2:5"]}, "h must be 0 or 1"),
        ({"seed": -1}, "seed"),
    ])
    def test_invalid(self, options, message):
        with pytest.raises(ConfigError, match=message):
            run_config(**options)

    def test_manifest_for_the_toy(self):
        payload = manifest(run_config(mode="2d-toy", m=4))
        assert payload["mode"] == "2d-toy"
        assert payload["triangles"] == 32


class TestScripts:
    def test_json_list(self, tmp_path):
        path = tmp_path / "s.json"
        path.write_text(json.dumps([{"supernode": 0, "leaf": 1}, {"edge": [0, 1], "pairing": "B"}]))
        entries = load_script(path)
        assert [entry.line for entry in entries] == [1, 2]
        assert entries[1].data == {"edge": [0, 1], "pairing": "B"}

    def test_json_lines_skip_blank_lines(self, tmp_path):
        path = tmp_path / "s.jsonl"
        path.write_text('{"supernode": 0, "leaf": 1}\n\n{"supernode": 1, "leaf": 3}\n')
        assert [entry.line for entry in load_script(path)] == [1, 3]

    def test_broken_json(self, tmp_path):
        path = tmp_path / "s.jsonl"
        path.write_text('{"supernode": 0, "leaf": 1}\n{oops\n')
        with pytest.raises(ConfigError, match="script line 2"):
            load_script(path)

    def test_run_stops_on_the_first_rejection(self, tiny_network, tmp_path):
        path = tmp_path / "s.json"
        path.write_text(json.dumps([{"edge": [0, 1], "pairing": "A"}, {"edge": [5, 5], "pairing": "A"}]))
        with pytest.raises(MoveRejected, match="script line 2"):
            run_script(tiny_network, load_script(path))
        assert tiny_network.revision == 1

    def test_inversion_and_back(self, tiny_network, tmp_path):
        pristine = state_hash(tiny_network)
        path = tmp_path / "s.json"
        path.write_text(json.dumps([{"supernode": 1, "leaf": 47}, {"supernode": 1, "leaf": 48}]))
        outcome = run_script(tiny_network, load_script(path))
        assert outcome.applied == 2
        assert outcome.skipped == []
        assert state_hash(tiny_network) == pristine


class TestFiles:
    def test_json_is_sorted_and_newline_terminated(self, tmp_path):
        path = atomic_write_json(tmp_path / "deep" / "x.json", {"b": 1, "a": [1, 2]})
        text = path.read_text()
        assert text.index('"a"') < text.index('"b"')
        assert text.endswith("\n")
        assert list(path.parent.iterdir()) == [path]

    def test_jsonl(self, tmp_path):
        path = atomic_write_jsonl(tmp_path / "h.jsonl", [{"seq": 0}, {"seq": 1}])
        assert path.read_text() == '{"seq":0}\n{"seq":1}\n'

    def test_csv_and_markdown(self, tmp_path):
        frame = pd.DataFrame({"K": [1, 2], "omega": ["0", "1/8"]})
        assert atomic_write_csv(tmp_path / "t.csv", frame).read_text() == "K,omega\n1,0\n2,1/8\n"
        assert frame_to_markdown(frame).splitlines() == ["| K | omega |", "| --- | --- |", "| 1 | 0 |", "| 2 | 1/8 |"]
