"""
CLI 출력 고정 파일 비교
- JSON 결과는 timestamp 를 뺀 뒤 to_json 으로 다시 직렬화해서 바이트 단위 비교
- 그래프 교환 형식 출력은 그대로 비교
"""

import json
from pathlib import Path

import pytest

import main
from conftest import WHEEL_TEXT

GOLDEN = Path(__file__).parent / "golden"
VOLATILE = ("timestamp",)

INPUTS = {
    "wheel.txt": WHEEL_TEXT,
    "k3.txt": "3 3\n0 1 0\n1 2 1\n0 2 2\n",
    "k4.txt": "4 3\n0 1 0\n0 2 0\n0 3 0\n1 2 1\n1 3 1\n2 3 2\n",
    "path.txt": "3 1\n0 1 0\n1 2 0\n",
    "triangle.dig": "3 3\n0 1\n1 2\n2 0\n",
    "h332.txt": "6 7\n0 3 0\n0 4 0\n0 5 1\n1 3 2\n1 4 2\n1 5 3\n2 3 4\n2 4 4\n2 5 5\n3 4 6\n",
}

CASES = [
    ("gen_h", ["gen", "h", "--a", "2", "--b", "3", "--k", "2"], 0),
    ("gen_h_json", ["gen", "h", "--a", "2", "--b", "3", "--k", "2", "--json"], 0),
    ("gen_h_merge", ["gen", "h", "--a", "1", "--b", "4", "--k", "2", "--merge"], 0),
    ("gen_cycle_power", ["gen", "cycle-power", "--k", "1", "--r", "3"], 0),
    ("gen_z_vertex", ["gen", "z-vertex", "--k", "1", "--r", "3"], 0),
    ("gen_wheel", ["gen", "wheel", "--k", "2"], 0),
    ("detect_triangle_absent", ["detect", "triangle", "wheel.txt"], 0),
    ("detect_triangle_found", ["detect", "triangle", "k3.txt"], 1),
    ("detect_cycle", ["detect", "cycle", "--max-len", "4", "wheel.txt"], 1),
    ("detect_reduce_digraph", ["detect", "reduce-digraph", "triangle.dig"], 0),
    ("detect_conjecture", ["detect", "conjecture", "--r", "3", "wheel.txt"], 0),
    ("bound_goodman", ["bound", "goodman", "--n", "4", "--m", "6"], 0),
    ("bound_goodman_error", ["bound", "goodman", "--n", "0", "--m", "0"], 2),
    ("bound_majority", ["bound", "majority", "--k", "2", "wheel.txt"], 0),
    ("bound_ls", ["bound", "ls", "--n", "6", "--m", "10"], 0),
    ("bound_chapprox", ["bound", "chapprox", "--n", "24", "--classes", "27", "--size", "8"], 0),
    ("bound_claim", ["bound", "claim", "--w", "4", "--W", "0,1,2,3", "--k", "2", "wheel.txt"], 0),
    ("bound_suite", ["bound", "suite", "--max-n", "3"], 0),
    ("gallai_find", ["gallai", "find", "k4.txt"], 0),
    ("gallai_check_lemma", ["gallai", "check-lemma", "k4.txt"], 0),
    ("gallai_find_rainbow", ["gallai", "find", "k3.txt"], 2),
    ("search_g", ["search", "g", "--n", "5", "--k", "2"], 0),
    ("search_verify", ["search", "verify", "--n", "5", "--k", "2"], 0),
    ("search_best_h", ["search", "best-h", "--n", "8", "--k", "2"], 0),
    ("search_colourable", ["search", "colourable", "--k", "2", "path.txt"], 0),
    ("search_colourable_infeasible", ["search", "colourable", "--k", "1", "k3.txt"], 1),
    ("report_empty", ["search", "report"], 0),
    ("report_empty", ["report"], 0),
    ("extract_thresholds", ["extract", "thresholds", "--k", "2"], 0),
    ("extract_pipeline", ["extract", "pipeline", "--k", "2", "h332.txt"], 0),
]


@pytest.fixture
def inputs(workdir):
    for name, text in INPUTS.items():
        (workdir / name).write_text(text, encoding="utf-8")
    return workdir


def normalised(out):
    """JSON 이면 변하는 필드를 빼고 다시 직렬화"""
    if not out.lstrip().startswith("{"):
        return out
    payload = json.loads(out)
    for key in VOLATILE:
        payload.pop(key, None)
    return main.to_json(payload)


def golden(name):
    for suffix in (".json", ".txt"):
        path = GOLDEN / f"{name}{suffix}"
        if path.exists():
            return path.read_text(encoding="utf-8")
    raise FileNotFoundError(name)


@pytest.mark.parametrize("name, argv, code", CASES, ids=[" ".join(c[1]) for c in CASES])
def test_matches_golden(inputs, capsys, name, argv, code):
    assert main.run(argv) == code
    assert normalised(capsys.readouterr().out) == golden(name)


def test_report_after_search(inputs, capsys):
    assert main.run(["search", "g", "--n", "5", "--k", "2"]) == 0
    capsys.readouterr()
    assert main.run(["report"]) == 0
    assert normalised(capsys.readouterr().out) == golden("report_after_search")


def test_every_golden_file_is_used():
    used = {name for name, _, _ in CASES} | {"report_after_search"}
    assert {path.stem for path in GOLDEN.iterdir()} == used


def test_timestamp_is_the_only_volatile_field(inputs, capsys):
    assert main.run(["bound", "goodman", "--n", "4", "--m", "6"]) == 0
    first = capsys.readouterr().out
    assert main.run(["bound", "goodman", "--n", "4", "--m", "6"]) == 0
    second = capsys.readouterr().out
    assert "timestamp" in json.loads(first)
    assert normalised(first) == normalised(second)
