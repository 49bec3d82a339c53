import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from modules.coloured_graph import ColouredGraph, SimpleGraph  # noqa: E402

# 5-바퀴: 사이클 0-1-2-3, 중심 4, C_i = {v_i v_{i+1}, v_i z}
WHEEL_TEXT = "5 4\n0 1 0\n0 4 0\n1 2 1\n1 4 1\n2 3 2\n2 4 2\n0 3 3\n3 4 3\n"


@pytest.fixture
def wheel5():
    return ColouredGraph.build(5, [
        (0, 1, 0), (0, 4, 0), (1, 2, 1), (1, 4, 1),
        (2, 3, 2), (2, 4, 2), (0, 3, 3), (3, 4, 3),
    ], relabel=False)


@pytest.fixture
def k4_gallai():
    """정점 0 에서 나머지로 색 0, 남은 K3 는 색 {1,1,2}"""
    return ColouredGraph.build(4, [
        (0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 1), (1, 3, 1), (2, 3, 2),
    ], relabel=False)


@pytest.fixture
def rainbow_k3():
    return ColouredGraph.build(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)], relabel=False)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """원장/리포트 디렉토리가 tmp 아래 생기도록"""
    monkeypatch.chdir(tmp_path)
    for var in ("RAINBOW_SEARCH_CEILING", "RAINBOW_CUT_CEILING", "RAINBOW_GALLAI_CEILING",
                "RAINBOW_WORKERS", "RAINBOW_BUDGET"):
        monkeypatch.delenv(var, raising=False)
    return tmp_path


def complete_coloured(n, colour=0):
    return ColouredGraph.build(n, [(u, v, colour) for u in range(n) for v in range(u + 1, n)])


def simple(n, pairs):
    return SimpleGraph.build(n, pairs)
