import json

import pytest

from affwgraph.cli import main
from affwgraph.fixtures import load_fixture_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestBuild:
    def test_json_matches_fixture(self, capsys):
        code, out = run(capsys, "build", "3", "2", "--format", "json")
        assert code == 0
        built = json.loads(out)
        golden = load_fixture_json("gamma_3_2")
        assert built == golden

    def test_dot_structure(self, capsys):
        code, out = run(capsys, "build", "3", "2", "--format", "dot")
        assert code == 0
        assert out.startswith('digraph "gamma_3_2"')
        assert out.count("dir=none") == 10
        assert sum(1 for line in out.splitlines() if "->" in line) == 20

    def test_variant(self, capsys):
        code, out = run(capsys, "build", "3", "3", "--variant", "p=0")
        assert code == 0
        assert json.loads(out) == load_fixture_json("gamma_prime_3_3")

    def test_deterministic(self, capsys):
        _, first = run(capsys, "build", "4", "2")
        _, second = run(capsys, "build", "4", "2")
        assert first == second

    def test_bad_shape(self, capsys):
        code, _ = run(capsys, "build", "2", "3")
        assert code == 2


class TestVerify:
    def test_pass(self, capsys):
        code, out = run(capsys, "verify", "3", "3", "--variant", "p=0", "--hecke", "--rules")
        assert code == 0
        report = json.loads(out)
        assert report["passed"]
        assert {r["rule"] for r in report["reports"]} == {
            "compatibility", "simplicity", "bonding", "polygon", "hecke",
        }

    def test_rules_only(self, capsys):
        code, out = run(capsys, "verify", "3", "2", "--rules")
        assert code == 0
        assert {r["rule"] for r in json.loads(out)["reports"]} == {
            "compatibility", "simplicity", "bonding", "polygon",
        }

    def test_failing_input_exits_one(self, capsys, tmp_path):
        graph = load_fixture_json("gamma_3_2")
        graph["edges"] = graph["edges"][:-1]  # drop one directed edge
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(graph), encoding="utf-8")
        code, out = run(capsys, "verify", "--input", str(path))
        assert code == 1
        report = json.loads(out)
        assert not report["passed"]
        assert any(r["witnesses"] for r in report["reports"])

    def test_valid_input_exits_zero(self, capsys, tmp_path):
        path = tmp_path / "good.json"
        path.write_text(json.dumps(load_fixture_json("gamma_3_2")), encoding="utf-8")
        code, _ = run(capsys, "verify", "--input", str(path))
        assert code == 0

    def test_missing_shape(self, capsys):
        code, _ = run(capsys, "verify")
        assert code == 2


class TestRestrictAndCells:
    def test_restrict_matches_fixture(self, capsys):
        code, out = run(capsys, "restrict", "3", "2", "--to", "1..4")
        assert code == 0
        built = json.loads(out)
        golden = load_fixture_json("restriction_3_2")
        golden.pop("cells")
        assert built == golden

    def test_cells_keyed_by_insertion_shape(self, capsys):
        code, out = run(capsys, "cells", "3", "2", "--restrict", "1..4")
        assert code == 0
        data = json.loads(out)
        assert data["count"] == 3
        assert [(c["key"], c["size"]) for c in data["cells"]] == [
            ([3, 2], 5), ([4, 1], 4), ([5], 1),
        ]

    def test_cells_unrestricted(self, capsys):
        code, out = run(capsys, "cells", "3", "3")
        assert code == 0
        assert json.loads(out)["count"] == 1

    def test_bad_interval(self, capsys):
        code, _ = run(capsys, "restrict", "3", "2", "--to", "nope")
        assert code == 2


class TestExport:
    def test_writes_both_formats(self, capsys, tmp_path):
        code, _ = run(capsys, "export", "3", "2", "--output", str(tmp_path))
        assert code == 0
        assert json.loads((tmp_path / "gamma_3_2.json").read_text()) == load_fixture_json(
            "gamma_3_2"
        )
        assert (tmp_path / "gamma_3_2.dot").read_text().startswith("digraph")


class TestRegress:
    def test_small_sweep(self, capsys):
        code, out = run(capsys, "regress", "--max-n", "4")
        assert code == 0
        lines = [line for line in out.splitlines() if line.strip()]
        assert len(lines) == 10
        assert all("PASS" in line for line in lines)


def test_fixture_env_override(capsys, tmp_path, monkeypatch):
    graph = load_fixture_json("gamma_3_2")
    (tmp_path / "gamma_3_2.json").write_text(json.dumps(graph), encoding="utf-8")
    monkeypatch.setenv("AFFWGRAPH_FIXTURES", str(tmp_path))
    assert load_fixture_json("gamma_3_2") == graph
    with pytest.raises(FileNotFoundError):
        load_fixture_json("gamma_4_2")
