import json
from pathlib import Path

import pytest

from loop_graphic import __version__
from loop_graphic.cli import (
    EXIT_BUDGET,
    EXIT_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
)
from loop_graphic.cli.main import main
from loop_graphic.graphs import (
    complete_graph_with_loops,
    empty_graph,
    graph_from_document,
    graph_to_document,
)

CaptureFixture = pytest.CaptureFixture[str]


def _write_graph(path: Path, doc: object) -> str:
    path.write_text(json.dumps(doc))
    return str(path)


class TestCheck:
    def test_gale_ryser_passes(self, capsys: CaptureFixture) -> None:
        assert main(["check", "--mode", "gale-ryser", "4 4 2 2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "gale-ryser check on (4,4,2,2): PASSED" in out
        assert "first violation: none" in out

    def test_erdos_gallai_fails(self, capsys: CaptureFixture) -> None:
        assert main(["check", "--mode", "eg", "3 3 1 1"]) == EXIT_FAILED
        out = capsys.readouterr().out
        assert "FAILED" in out
        assert "first violation: k=2 (lhs 6 > rhs 4)" in out

    def test_empty_sequence(self) -> None:
        assert main(["check", "--mode", "loops-reduced", ""]) == EXIT_OK

    def test_json(self, capsys: CaptureFixture) -> None:
        assert main(["check", "--mode", "eg", "--json", "3 3 1 1"]) == EXIT_FAILED
        doc = json.loads(capsys.readouterr().out)
        assert doc["first_violation"] == 2
        assert doc["rows"][1] == {"k": 2, "lhs": 6, "rhs": 4, "slack": -2}

    def test_unsorted_needs_sort(self) -> None:
        assert main(["check", "1 2"]) == EXIT_INPUT_ERROR
        assert main(["check", "--sort", "1 2"]) == EXIT_OK

    def test_garbage(self, capsys: CaptureFixture) -> None:
        assert main(["check", "a b"]) == EXIT_INPUT_ERROR
        assert "error:" in capsys.readouterr().err

    def test_missing_sequence(self) -> None:
        assert main(["check"]) == EXIT_INPUT_ERROR

    def test_sequence_file(self, tmp_path: Path) -> None:
        path = tmp_path / "d.json"
        path.write_text('{"degrees": [4, 4, 2, 2]}')
        assert main(["check", "--mode", "gale-ryser", "--file", str(path)]) == EXIT_OK
        (tmp_path / "d.txt").write_text("3 3 1 1\n")
        assert main(["check", "--mode", "eg", "--file", str(tmp_path / "d.txt")]) == 1

    def test_missing_file(self, tmp_path: Path) -> None:
        missing = str(tmp_path / "nope.txt")
        assert main(["check", "--file", missing]) == EXIT_INPUT_ERROR


class TestRealize:
    def test_reduced_degree_three(self, capsys: CaptureFixture) -> None:
        assert main(["realize", "--mode", "loops-reduced", "3 3 3"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc == graph_to_document(complete_graph_with_loops(3))

    def test_simple_triangle(self, capsys: CaptureFixture) -> None:
        assert main(["realize", "--mode", "simple", "2 2 2"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]], "loops": []}

    def test_infeasible_prints_report(self, capsys: CaptureFixture) -> None:
        assert main(["realize", "--mode", "loops-double", "3"]) == EXIT_FAILED
        out = capsys.readouterr().out
        assert "loops-double check on (3): FAILED" in out
        assert "(odd)" in out

    def test_trace(self, capsys: CaptureFixture) -> None:
        assert main(["realize", "--mode", "loops-double", "--trace", "4 4 4"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert graph_from_document(doc["graph"]) == complete_graph_with_loops(3)
        steps = doc["trace"]["rebuild_steps"]
        assert len(steps) == len(doc["trace"]["reductions"]["steps"]) == 6
        assert steps[4] == {"kind": "edge-to-tail-loop", "witnesses": [1, 2, 0]}

    def test_dot(self, capsys: CaptureFixture) -> None:
        assert main(["realize", "--dot", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("graph G {")
        assert "    0 -- 0;" in out

    def test_dot_and_trace_conflict(self) -> None:
        with pytest.raises(SystemExit) as excinfo:
            main(["realize", "--dot", "--trace", "1"])
        assert excinfo.value.code == EXIT_INPUT_ERROR

    def test_output_file(self, tmp_path: Path, capsys: CaptureFixture) -> None:
        target = tmp_path / "g.json"
        assert main(["realize", "-o", str(target), "3 3 3"]) == EXIT_OK
        assert capsys.readouterr().out == ""
        doc = json.loads(target.read_text())
        assert graph_from_document(doc) == complete_graph_with_loops(3)


class TestCover:
    def test_tensor(self, k3_loops_file: Path, capsys: CaptureFixture) -> None:
        assert main(["cover", str(k3_loops_file)]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert (doc["n_left"], doc["n_right"]) == (3, 3)
        assert len(doc["edges"]) == 9

    def test_topological(self, k3_loops_file: Path, capsys: CaptureFixture) -> None:
        assert main(["cover", "--kind", "topological", str(k3_loops_file)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 6
        assert sum(1 for _, _, mult in doc["edges"] if mult == 2) == 3

    def test_empty_graph(self, tmp_path: Path, capsys: CaptureFixture) -> None:
        path = _write_graph(tmp_path / "e.json", graph_to_document(empty_graph(2)))
        assert main(["cover", path]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["edges"] == []

    def test_dot(self, k3_loops_file: Path, capsys: CaptureFixture) -> None:
        assert main(["cover", "--dot", str(k3_loops_file)]) == EXIT_OK
        assert "L0 -- R0;" in capsys.readouterr().out

    @pytest.mark.parametrize("body", ["{not json", '{"n": 2, "edges": [[0, 0]]}'])
    def test_bad_graph_file(self, tmp_path: Path, body: str) -> None:
        path = tmp_path / "bad.json"
        path.write_text(body)
        assert main(["cover", str(path)]) == EXIT_INPUT_ERROR


class TestComplement:
    def test_sequence(self, capsys: CaptureFixture) -> None:
        assert main(["complement", "--sequence", "4 4 2 2"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "2 2 0 0"

    def test_simple_sequence_json(self, capsys: CaptureFixture) -> None:
        args = ["complement", "--kind", "simple", "--json", "--sequence", "2 1 1"]
        assert main(args) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {"degrees": [1, 1, 0]}

    def test_degree_exceeds_order(self) -> None:
        assert main(["complement", "--sequence", "3 1"]) == EXIT_INPUT_ERROR

    def test_graph(self, k3_loops_file: Path, capsys: CaptureFixture) -> None:
        assert main(["complement", "--graph", str(k3_loops_file)]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert graph_from_document(doc) == empty_graph(3)

    def test_dot_needs_graph(self) -> None:
        assert main(["complement", "--dot", "--sequence", "1"]) == EXIT_INPUT_ERROR


class TestOracle:
    def test_single_query(self, capsys: CaptureFixture) -> None:
        assert main(["oracle", "--convention", "reduced", "3 3 1 1"]) == EXIT_OK
        first, _, rest = capsys.readouterr().out.partition("\n")
        assert first == "realizable"
        assert graph_from_document(json.loads(rest)).n == 4

    def test_loop_counted_twice(self, capsys: CaptureFixture) -> None:
        assert main(["oracle", "--convention", "double", "2"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("realizable")

    def test_not_realizable(self, capsys: CaptureFixture) -> None:
        assert main(["oracle", "2"]) == EXIT_FAILED
        assert capsys.readouterr().out.strip() == "not realizable"

    def test_scan_compare(self, capsys: CaptureFixture) -> None:
        args = ["oracle", "--scan", "--n", "4", "--dmax", "4"]
        args += ["--convention", "reduced", "--compare"]
        assert main(args) == EXIT_OK
        out = capsys.readouterr().out
        assert "70 sequences" in out
        assert "0 disagreements" in out

    def test_bipartite(self, capsys: CaptureFixture) -> None:
        assert main(["oracle", "--bipartite", "--compare", "4 4 2 2"]) == EXIT_OK
        assert "0 disagreements" in capsys.readouterr().out

    def test_budget(self) -> None:
        assert main(["oracle", "1 1 1 1 1 1"]) == EXIT_BUDGET
        assert main(["oracle", "--max-n", "1", "1 1"]) == EXIT_BUDGET

    def test_budget_from_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("LOOP_GRAPHIC_ORACLE_MAX_N", "2")
        assert main(["oracle", "1 1 1"]) == EXIT_BUDGET

    def test_scan_needs_bounds(self) -> None:
        assert main(["oracle", "--scan", "--n", "2"]) == EXIT_INPUT_ERROR

    @pytest.mark.parametrize(
        "flags",
        [
            ["--timeout", "0"],
            ["--timeout", "-5"],
            ["--max-n", "-1"],
        ],
    )
    def test_invalid_budget_is_an_input_error(self, flags: list[str]) -> None:
        assert main(["oracle", *flags, "1 1"]) == EXIT_INPUT_ERROR

    @pytest.mark.parametrize(
        "flags",
        [
            ["--n", "-1", "--dmax", "2"],
            ["--n", "2", "--dmax", "-1"],
            ["--n", "2", "--dmax", "2", "--jobs", "0"],
        ],
    )
    def test_invalid_scan_is_an_input_error(self, flags: list[str]) -> None:
        assert main(["oracle", "--scan", *flags]) == EXIT_INPUT_ERROR

    def test_zero_workers_setting_is_an_input_error(
        self, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("LOOP_GRAPHIC_SCAN_WORKERS", "0")
        assert main(["oracle", "--scan", "--n", "2", "--dmax", "2"]) == EXIT_INPUT_ERROR

    def test_save(self, tmp_path: Path) -> None:
        assert main(["oracle", "--save", "1 1"]) == EXIT_OK
        lines = (tmp_path / "fixtures" / "reduced.jsonl").read_text().splitlines()
        assert json.loads(lines[0])["degrees"] == [1, 1]


def test_version(capsys: CaptureFixture) -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out
