"""
g(n,k) 정확 계산과 H 가족 최적화
- 간선 수 내림차순으로 동형류를 훑으며 색칠 가능성 판정
- Goodman + 다수색 상한으로 단계 전체 / 개별 그래프 가지치기
- 구성(H 가족, 바퀴 예제)으로 얻은 하한에 도달하면 바로 종료
- 예산(초) 초과 시 체크포인트 저장 후 lower_bound_only
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from modules.bounds import level_infeasible, majority_infeasible, triangle_count
from modules.colouring_oracle import colourable_rainbow_free
from modules.coloured_graph import ColouredGraph, SimpleGraph, graph_to_json
from modules.constructions import build_H, build_wheel_example
from modules.errors import InternalConsistencyError, PreconditionError
from modules.graph_enumerator import graphs_by_edge_count
from modules.rainbow_detector import find_rainbow_triangle


@dataclass
class SearchResult:
    n: int
    k: int
    g_value: int
    witness: ColouredGraph
    enumerated: int
    status: str                      # exact | lower_bound_only
    tested: int = 0
    pruned_majority: int = 0
    pruned_levels: int = 0
    pruned_confirmed: int = 0
    pruned_unconfirmed: int = 0
    seconds: float = 0.0
    source: str = "search"           # search | construction

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "g": self.g_value,
            "status": self.status,
            "enumerated": self.enumerated,
            "tested": self.tested,
            "pruned_majority": self.pruned_majority,
            "pruned_levels": self.pruned_levels,
            "pruned_confirmed": self.pruned_confirmed,
            "pruned_unconfirmed": self.pruned_unconfirmed,
            "source": self.source,
            "witness": graph_to_json(self.witness),
        }


@dataclass
class HOptimum:
    n: int
    k: int
    best_a: List[int]
    max_edges: int
    case: str                        # r<=k | r>=k+1
    t: int
    r: int

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k,
            "best_a": list(self.best_a),
            "max_edges": self.max_edges,
            "case": self.case, "t": self.t, "r": self.r,
        }


# ----------------------------------------------------------------------
# H 가족
# ----------------------------------------------------------------------

def h_edge_count(a: int, b: int, k: int) -> int:
    """a·b + ⌊b/k⌋·C(k,2) + C(b mod k, 2)"""
    for name, value in [("a", a), ("b", b), ("k", k)]:
        if value < 1:
            raise PreconditionError(f"{name} 는 1 이상이어야 합니다: {value}")
    r = b % k
    return a * b + (b // k) * k * (k - 1) // 2 + r * (r - 1) // 2


def h_sweep(n: int, k: int) -> np.ndarray:
    """a = 1..n-1 에 대한 |E(H^k_{a,n-a})| (index i 가 a = i+1)"""
    a = np.arange(1, n, dtype=np.int64)
    b = n - a
    r = b % k
    return a * b + (b // k) * (k * (k - 1) // 2) + r * (r - 1) // 2


def best_h(n: int, k: int) -> HOptimum:
    """H^k_{a,n-a} 최대 간선 수

    n = t(2k) + r (1 ≤ r ≤ 2k) 로 두고 닫힌 식과 전수 비교가 일치해야 한다.
    """
    if k < 1 or n <= 2 * k:
        raise PreconditionError(f"n > 2k 가 필요합니다 (n={n}, k={k})")

    # 1. 전수 계산
    values = h_sweep(n, k)
    brute_max = int(values.max())
    brute_args = [int(i) + 1 for i in np.flatnonzero(values == brute_max)]

    # 2. 닫힌 식
    t = (n - 1) // (2 * k)
    r = n - 2 * k * t
    base = Fraction(n * n, 4) + Fraction((k - 1) * n, 4)
    if r <= k:
        case = "r<=k"
        formula_max = base - Fraction(r * (k + 1 - r), 4)
        formula_args = [t * k, t * k + 1]
    else:
        case = "r>=k+1"
        formula_max = base + Fraction((r - k - 1) * (2 * k - r), 4)
        formula_args = [(t - 1) * k + r]

    # 3. 교차검증
    if formula_max != brute_max or formula_args != brute_args:
        raise InternalConsistencyError(
            f"best_h 불일치 n={n}, k={k}: 식 {formula_max} @ {formula_args}, "
            f"전수 {brute_max} @ {brute_args}")

    return HOptimum(n, k, brute_args, brute_max, case, t, r)


def h_maximum(n: int, k: int) -> Tuple[int, List[int]]:
    """n ≤ 2k 도 포함한 H 가족 최대값 (전수만)"""
    if n > 2 * k:
        opt = best_h(n, k)
        return opt.max_edges, opt.best_a
    if n < 2:
        return 0, []
    values = h_sweep(n, k)
    best = int(values.max())
    return best, [int(i) + 1 for i in np.flatnonzero(values == best)]


def construction_lower_bound(n: int, k: int) -> Tuple[int, ColouredGraph, str]:
    """H 가족과 (n = 3k-1 이면) 바퀴 예제 중 간선이 가장 많은 것"""
    if n < 2:
        return 0, ColouredGraph(max(n, 0), ()), "empty"
    value, args = h_maximum(n, k)
    witness, source = build_H(args[0], n - args[0], k), f"H(a={args[0]})"
    if k >= 2 and n == 3 * k - 1:
        wheel = build_wheel_example(k)
        if wheel.m > value:
            value, witness, source = wheel.m, wheel, "wheel"
    return value, witness, source


# ----------------------------------------------------------------------
# g(n,k) 탐색
# ----------------------------------------------------------------------

def _test_graph(args) -> Tuple[bool, Optional[ColouredGraph], bool]:
    """(가능 여부, 색칠, 다수색 상한으로 걸러졌는지)"""
    graph, k, prune = args
    if prune and majority_infeasible(triangle_count(graph), graph.m, k):
        return False, None, True
    outcome = colourable_rainbow_free(graph, k, prune=False)
    return bool(outcome.feasible), outcome.colouring, False


def _verify_witness(witness: ColouredGraph, n: int, k: int):
    if witness.n != n or witness.max_class_size > k or find_rainbow_triangle(witness).found:
        raise InternalConsistencyError(f"g({n},{k}) 증인 검증 실패: {witness}")


def _confirm_pruned(pruned: List[SimpleGraph], k: int, samples: int,
                    node_limit: Optional[int]) -> Tuple[int, int]:
    """가지친 그래프 중 간선 적은 것부터 samples 개를 전체 백트래킹으로 재확인"""
    confirmed = unconfirmed = 0
    for graph in sorted(pruned, key=lambda g: g.m)[:samples]:
        outcome = colourable_rainbow_free(graph, k, prune=False, node_limit=node_limit)
        if outcome.feasible:
            raise InternalConsistencyError(f"가지친 그래프가 색칠 가능합니다: {graph.edges}")
        if outcome.feasible is None:
            unconfirmed += 1
        else:
            confirmed += 1
    return confirmed, unconfirmed


def compute_g(n: int, k: int, budget: Optional[float] = None, workers: int = 1,
              checkpoint=None, ceiling: int = 7, level_pruning: bool = True,
              graph_pruning: bool = True, seed_constructions: bool = True, verify_pruned_samples: int = 10,
              pruned_node_limit: Optional[int] = 200000, progress: bool = False) -> SearchResult:
    """g(n,k) 계산

    Args:
        budget: 초 단위 예산 (None 이면 무제한)
        workers: 2 이상이면 multiprocessing.Pool 로 한 단계 안의 그래프를 나눠 판정
        checkpoint: load/save/clear_checkpoint(n, k, ...) 를 가진 객체 (LedgerManager)
        ceiling: 허용 최대 n
        level_pruning: 간선 수 단계 전체를 Goodman + 다수색 상한으로 건너뜀
        graph_pruning: 그래프마다 t(G) > ½m(k-1) 이면 백트래킹 없이 제외
        seed_constructions: 구성 하한에 도달하면 탐색 종료
        progress: 단계별 tqdm 진행 표시줄 (stderr)
    """
    if k < 1:
        raise PreconditionError(f"k 는 1 이상이어야 합니다: {k}")
    if not 1 <= n <= ceiling:
        raise PreconditionError(f"n={n} 이 탐색 상한 {ceiling} 을 벗어났습니다")

    started = time.monotonic()
    seed_value, seed_witness, seed_source = construction_lower_bound(n, k)

    resume = checkpoint.load_checkpoint(n, k) if checkpoint else None
    resume_m = resume["level_m"] if resume else None
    resume_index = resume["index"] if resume else 0
    prior_seconds = resume.get("seconds", 0.0) if resume else 0.0

    stats = {"enumerated": resume.get("enumerated", 0) if resume else 0,
             "tested": 0, "pruned_majority": 0, "pruned_levels": 0}
    pruned_pool: List[SimpleGraph] = []
    pool = None

    def finish(value, witness, status, source):
        confirmed, unconfirmed = _confirm_pruned(
            pruned_pool, k, verify_pruned_samples, pruned_node_limit)
        _verify_witness(witness, n, k)
        if witness.m != value:
            raise InternalConsistencyError(f"증인 간선 수 {witness.m} ≠ {value}")
        if status == "exact" and checkpoint:
            checkpoint.clear_checkpoint(n, k)
        return SearchResult(
            n=n, k=k, g_value=value, witness=witness, status=status, source=source,
            enumerated=stats["enumerated"], tested=stats["tested"],
            pruned_majority=stats["pruned_majority"], pruned_levels=stats["pruned_levels"],
            pruned_confirmed=confirmed, pruned_unconfirmed=unconfirmed,
            seconds=round(prior_seconds + time.monotonic() - started, 3))

    try:
        if workers > 1:
            pool = Pool(processes=workers)
        levels = graphs_by_edge_count(n)
        if progress:
            levels = tqdm(levels, total=n * (n - 1) // 2 + 1, desc=f"g({n},{k})", leave=False)
        for m, level in levels:
            if resume_m is not None and m > resume_m:
                continue

            # 1. 구성 하한 도달
            if seed_constructions and m <= seed_value:
                return finish(seed_value, seed_witness, "exact", seed_source)

            # 2. 단계 전체 가지치기
            if level_pruning and level_infeasible(n, m, k):
                stats["pruned_levels"] += 1
                stats["enumerated"] += len(level)
                pruned_pool.extend(level)
                continue

            # 3. 삼각형 적은 그래프부터 판정
            ordered = sorted(level, key=triangle_count)
            start = resume_index if m == resume_m else 0
            jobs = [(graph, k, graph_pruning) for graph in ordered[start:]]
            results = pool.imap(_test_graph, jobs) if pool else map(_test_graph, jobs)

            for offset, (feasible, colouring, pruned) in enumerate(results):
                index = start + offset
                stats["enumerated"] += 1
                if pruned:
                    stats["pruned_majority"] += 1
                    pruned_pool.append(ordered[index])
                else:
                    stats["tested"] += 1
                if feasible:
                    return finish(m, colouring, "exact", "search")

                if budget is not None and time.monotonic() - started > budget:
                    if checkpoint:
                        checkpoint.save_checkpoint(n, k, {
                            "n": n, "k": k, "level_m": m, "index": index + 1,
                            "enumerated": stats["enumerated"],
                            "seconds": round(prior_seconds + time.monotonic() - started, 3),
                        })
                    return finish(seed_value, seed_witness, "lower_bound_only", seed_source)
    finally:
        if pool:
            pool.terminate()

    raise InternalConsistencyError(f"g({n},{k}) 탐색이 빈 그래프까지 답을 찾지 못했습니다")


@dataclass
class MainTheoremVerdict:
    n: int
    k: int
    g_value: int
    status: str
    h_max: int
    best_a: List[int] = field(default_factory=list)
    verdict: str = ""

    def to_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "g": self.g_value, "status": self.status,
            "best_h": self.h_max, "best_a": list(self.best_a), "verdict": self.verdict,
        }


def classify(g_value: int, status: str, h_max: int) -> str:
    """equal / construction-suboptimal / search-lower-bound-only"""
    if status != "exact":
        return "search-lower-bound-only"
    if g_value == h_max:
        return "equal"
    if g_value > h_max:
        return "construction-suboptimal"
    raise InternalConsistencyError(f"g={g_value} 가 H 가족 값 {h_max} 보다 작습니다")


def verify_theorem_main_at(n: int, k: int, result: Optional[SearchResult] = None,
                           **search_options) -> MainTheoremVerdict:
    """탐색값과 H 가족 최대값 비교 (작은 n 에서는 참고용)"""
    if result is None:
        result = compute_g(n, k, **search_options)
    h_max, best_a = h_maximum(n, k)
    return MainTheoremVerdict(n, k, result.g_value, result.status, h_max, best_a,
                              classify(result.g_value, result.status, h_max))


# 테스트 코드
if __name__ == "__main__":
    print("📊 best_h(5,2):", best_h(5, 2).to_dict())
    result = compute_g(5, 2, seed_constructions=False)
    print(f"✅ g(5,2) = {result.g_value} ({result.status}, {result.seconds}s)")
