import pandas as pd
import pytest

from modules.ledger_manager import LedgerManager
from modules.report_generator import COLUMNS, ReportGenerator, g_grid, render_table, report_table

ROWS = [
    {"n": 5, "k": 2, "g": 8, "status": "exact", "best_h": 7},
    {"n": 6, "k": 2, "g": 9, "status": "lower_bound_only"},
    {"n": 6, "k": 2, "g": 10, "status": "exact", "best_h": 10},
    {"n": 5, "k": 1, "g": 6, "status": "exact"},
]


def test_table_columns_and_verdicts():
    df = report_table(ROWS)
    assert list(df.columns) == COLUMNS
    assert df[["n", "k"]].values.tolist() == [[5, 1], [5, 2], [6, 2]]
    verdicts = dict(zip(zip(df["n"], df["k"]), df["verdict"]))
    assert verdicts[(5, 2)] == "construction-suboptimal"
    assert verdicts[(6, 2)] == "equal"
    assert verdicts[(5, 1)] == "equal"


def test_best_h_filled_in():
    df = report_table([{"n": 6, "k": 2, "g": 10, "status": "exact"}])
    assert df.loc[0, "best_h"] == 10


def test_lower_bound_verdict():
    df = report_table([{"n": 7, "k": 2, "g": 13, "status": "lower_bound_only"}])
    assert df.loc[0, "verdict"] == "search-lower-bound-only"


def test_bad_rows_skipped(capsys):
    df = report_table([
        {"n": 5, "k": 2, "status": "exact"},
        {"n": "five", "k": 2, "g": 8, "status": "exact"},
        "garbage",
        {"n": 5, "k": 2, "g": 8, "status": "exact"},
    ])
    assert len(df) == 1
    assert capsys.readouterr().err.count("⚠️") == 3


def test_empty():
    df = report_table([])
    assert df.empty
    assert list(df.columns) == COLUMNS
    assert render_table(df) == "(빈 원장)\n"
    assert g_grid(df).empty


def test_grid_marks_lower_bounds():
    df = report_table([
        {"n": 5, "k": 2, "g": 8, "status": "exact"},
        {"n": 7, "k": 2, "g": 13, "status": "lower_bound_only"},
        {"n": 5, "k": 1, "g": 6, "status": "exact"},
    ])
    grid = g_grid(df)
    assert grid.loc[5, 2] == "8"
    assert grid.loc[7, 2] == "13*"
    assert grid.loc[7, 1] == "-"


def test_render():
    text = render_table(report_table(ROWS))
    assert "📊 g(n,k) 결과" in text
    assert "construction-suboptimal" in text


class TestReportGenerator:
    @pytest.fixture
    def generator(self, tmp_path):
        ledger = LedgerManager(tmp_path / "data", tmp_path / "reports")
        for row in ROWS:
            ledger.add_result(row)
        return ReportGenerator(ledger)

    def test_build(self, generator):
        assert isinstance(generator.build(), pd.DataFrame)
        assert len(generator.build()) == 3

    def test_payload(self, generator):
        payload = generator.to_payload()
        assert len(payload["rows"]) == 3
        assert payload["grid"]["6"]["2"] == "10"
        assert payload["grid"]["6"]["1"] == "-"

    def test_export(self, generator):
        path = generator.export()
        assert path.exists()
        assert path.read_text(encoding="utf-8-sig").splitlines()[0].startswith("n,k,g,status")
