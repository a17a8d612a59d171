import json
from pathlib import Path

import pytest

from loop_graphic.graphs import complete_graph_with_loops, graph_to_document
from loop_graphic.oracle import OracleBudget


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep LOOP_GRAPHIC_* from the caller's environment out of the tests."""
    for name in (
        "ORACLE_MAX_N",
        "ORACLE_TIMEOUT",
        "BIPARTITE_MAX_N",
        "SCAN_WORKERS",
        "LOG_LEVEL",
    ):
        monkeypatch.delenv(f"LOOP_GRAPHIC_{name}", raising=False)
    monkeypatch.setenv("LOOP_GRAPHIC_FIXTURES_PATH", str(tmp_path / "fixtures"))


@pytest.fixture
def budget() -> OracleBudget:
    return OracleBudget(max_n=6, timeout=120.0, bipartite_max_n=4)


@pytest.fixture
def k3_loops_file(tmp_path: Path) -> Path:
    """GraphFile holding the complete graph-with-loops on three vertices."""
    path = tmp_path / "k3_loops.json"
    path.write_text(json.dumps(graph_to_document(complete_graph_with_loops(3))))
    return path
