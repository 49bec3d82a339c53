import csv

import pytest

from modules.coloured_graph import read_graph
from modules.ledger_manager import LedgerManager


@pytest.fixture
def ledger(tmp_path):
    return LedgerManager(tmp_path / "data", tmp_path / "reports")


def test_directories_created(ledger):
    assert ledger.witness_dir.is_dir()
    assert ledger.checkpoint_dir.is_dir()
    assert ledger.reports_dir.is_dir()


def test_add_and_read(ledger):
    record = ledger.add_result({"n": 5, "k": 2, "g": 8, "status": "exact"})
    assert "timestamp" in record
    rows = ledger.get_results()
    assert len(rows) == 1
    assert rows[0]["g"] == 8


def test_empty_ledger(ledger):
    assert ledger.get_results() == []
    assert ledger.latest_results() == {}


def test_latest_wins(ledger):
    ledger.add_result({"n": 6, "k": 2, "g": 9, "status": "lower_bound_only"})
    ledger.add_result({"n": 6, "k": 2, "g": 10, "status": "exact"})
    assert ledger.latest_results()[(6, 2)]["g"] == 10


def test_corrupt_rows_skipped(ledger, capsys):
    ledger.add_result({"n": 5, "k": 2, "g": 8, "status": "exact"})
    with open(ledger.results_file, "a", encoding="utf-8") as f:
        f.write("{not json\n")
        f.write('{"n": 4, "k": 1}\n')
        f.write("\n")
        f.write("[1, 2]\n")
    rows = ledger.get_results()
    assert [row["n"] for row in rows] == [5]
    assert capsys.readouterr().err.count("⚠️") == 3


def test_witness_file(ledger, wheel5):
    relative = ledger.save_witness(5, 2, wheel5)
    assert relative == "witnesses/g_5_2.txt"
    text = (ledger.data_dir / relative).read_text(encoding="utf-8")
    assert read_graph(text) == wheel5


def test_checkpoint_round_trip(ledger):
    assert ledger.load_checkpoint(5, 2) is None
    ledger.save_checkpoint(5, 2, {"level_m": 9, "index": 3})
    assert ledger.load_checkpoint(5, 2) == {"level_m": 9, "index": 3}
    ledger.clear_checkpoint(5, 2)
    assert ledger.load_checkpoint(5, 2) is None
    ledger.clear_checkpoint(5, 2)


def test_corrupt_checkpoint(ledger):
    (ledger.checkpoint_dir / "g_5_2.json").write_text("{", encoding="utf-8")
    assert ledger.load_checkpoint(5, 2) is None


def test_export_report(ledger):
    ledger.add_result({"n": 5, "k": 2, "g": 8, "status": "exact", "best_h": 7,
                       "verdict": "construction-suboptimal"})
    path = ledger.export_report()
    assert path.parent == ledger.reports_dir
    assert path.name.startswith("g_report_")
    with open(path, encoding="utf-8-sig", newline="") as f:
        rows = list(csv.DictReader(f))
    assert rows[0]["g"] == "8"
    assert rows[0]["verdict"] == "construction-suboptimal"
    assert rows[0]["enumerated"] == ""
