"""
삼각형 개수와 부등식 검사
- 다수색 상한 t(G) ≤ ½m(k-1), Goodman 하한, 안정성 하한 s⌊n/2⌋
- 색 클래스 수/크기로 무지개 삼각형이 강제되는지 판정
- 모든 비교는 정수/Fraction 으로만
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Optional

import numpy as np
from tqdm import tqdm

from modules.coloured_graph import (
    ColouredGraph, adjacency_matrix, induced_counts, iter_bits, mask_of,
)
from modules.errors import InternalConsistencyError, PreconditionError
from modules.rainbow_detector import find_rainbow_triangle


@dataclass
class BoundReport:
    """lhs (relation) rhs 형태의 부등식 결과

    lhs 가 None 이면 비교할 그래프가 없는 경우 (holds 도 None)
    """

    name: str
    lhs: Optional[Fraction]
    rhs: Fraction
    relation: str
    holds: Optional[bool]
    context: Dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "holds": self.holds,
            "context": dict(self.context),
        }


def _compare(lhs, relation: str, rhs) -> Optional[bool]:
    if lhs is None:
        return None
    if relation == "<=":
        return lhs <= rhs
    return lhs >= rhs


def triangle_count(g) -> int:
    """간선 (u,v) 마다 w > v 공통 이웃 수의 합"""
    adj = g.adj
    total = 0
    for edge in g.edges:
        u, v = edge[0], edge[1]
        total += bin(adj[u] & adj[v] & ~((1 << (v + 1)) - 1)).count("1")
    return total


def triangle_count_matrix(g) -> int:
    """trace(A³)/6 (교차검증용)"""
    if g.n == 0:
        return 0
    a = adjacency_matrix(g)
    return int(np.trace(a @ a @ a)) // 6


def majority_infeasible(t: int, m: int, k: int) -> bool:
    """t(G) > ½m(k-1) 이면 색 크기 k 이하의 무지개 없는 색칠 불가능"""
    return 2 * t > m * (k - 1)


def check_majority_bound(g: ColouredGraph, k: int) -> BoundReport:
    """t(G) ≤ ½m(k-1) 확인

    무지개 삼각형이 없으면 중간 상한 Σ C(|C_i|,2) 도 함께 확인한다.
    """
    if g.max_class_size > k:
        raise PreconditionError(f"색 크기 {g.max_class_size} 가 k={k} 를 넘습니다")

    t = triangle_count(g)
    rhs = Fraction(g.m * (k - 1), 2)
    pair_sum = sum(comb(s, 2) for s in g.class_sizes)
    rainbow_free = not find_rainbow_triangle(g).found

    context = {
        "n": g.n, "m": g.m, "k": k,
        "class_pair_sum": pair_sum,
        "rainbow_free": rainbow_free,
    }
    if rainbow_free:
        context["refined_holds"] = t <= pair_sum <= rhs

    return BoundReport("majority", Fraction(t), rhs, "<=", t <= rhs, context)


def goodman_lower_bound(n: int, m: int) -> Fraction:
    """(4m/3n)(m - n²/4), 음수여도 그대로"""
    if n < 1:
        raise PreconditionError("Goodman 하한은 n ≥ 1 에서만 정의됩니다")
    return Fraction(4 * m, 3 * n) * (m - Fraction(n * n, 4))


def check_goodman(g) -> BoundReport:
    rhs = goodman_lower_bound(g.n, g.m)
    t = triangle_count(g)
    return BoundReport("goodman", Fraction(t), rhs, ">=", t >= rhs,
                       {"n": g.n, "m": g.m})


def level_infeasible(n: int, m: int, k: int) -> bool:
    """Goodman 하한 > ½m(k-1) 이면 n정점 m간선 그래프 전부 불가능"""
    return goodman_lower_bound(n, m) > Fraction(m * (k - 1), 2)


@dataclass
class ChapproxVerdict:
    n: int
    num_classes: int
    min_class_size: int
    condition_1: bool
    condition_2: bool

    @property
    def forced(self) -> bool:
        return self.condition_1 or self.condition_2

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "num_classes": self.num_classes,
            "min_class_size": self.min_class_size,
            "condition_1": self.condition_1,
            "condition_2": self.condition_2,
            "forced": self.forced,
        }


def chapprox_forces_rainbow(n: int, num_classes: int, min_class_size: int) -> ChapproxVerdict:
    """(1) 색 ≥ 9n/8, 크기 ≥ n/3 또는 (2) 색 ≥ n, 크기 ≥ 2n/5"""
    for name, value in [("n", n), ("num_classes", num_classes), ("min_class_size", min_class_size)]:
        if value < 1:
            raise PreconditionError(f"{name} 는 1 이상이어야 합니다: {value}")

    cond1 = 8 * num_classes >= 9 * n and 3 * min_class_size >= n
    cond2 = num_classes >= n and 5 * min_class_size >= 2 * n
    return ChapproxVerdict(n, num_classes, min_class_size, cond1, cond2)


def ls_stability_bound(n: int, m: int, g=None) -> BoundReport:
    """s = m - ⌊n/2⌋⌈n/2⌉, 0 ≤ s < ⌊n/2⌋ 이면 t(G) ≥ s⌊n/2⌋"""
    half = n // 2
    s = m - half * (n - half)
    if not 0 <= s < half:
        raise PreconditionError(f"s={s} 가 0 ≤ s < {half} 범위 밖이라 적용할 수 없습니다")

    rhs = Fraction(s * half)
    lhs = None if g is None else Fraction(triangle_count(g))
    return BoundReport("ls_stability", lhs, rhs, ">=", _compare(lhs, ">=", rhs),
                       {"n": n, "m": m, "s": s})


def check_ls_stability(g) -> BoundReport:
    return ls_stability_bound(g.n, g.m, g)


def claim_neighbourhood_bound(g: ColouredGraph, w: int, W: Iterable[int], k: int) -> BoundReport:
    """W ⊆ N(w) 이면 e(W) ≤ (k-1)|W|

    context 의 refined_bound 는 Σ_{i∈I} (C(d_i,2) + (k - d_i)),
    d_i 는 w 에서 W 로 가는 색 i 간선 수.
    """
    if not 0 <= w < g.n:
        raise PreconditionError(f"정점 번호 {w} 가 범위를 벗어났습니다")
    members = sorted(set(W))
    w_mask = mask_of(members)
    if w_mask & ~g.adj[w]:
        raise PreconditionError(f"W 가 N({w}) 에 포함되지 않습니다")

    e_w = induced_counts(g, members, [])[0]
    rhs = Fraction((k - 1) * len(members))

    spokes: Dict[int, int] = {}
    for v in iter_bits(w_mask):
        c = g.colour_of(w, v)
        spokes[c] = spokes.get(c, 0) + 1
    refined = sum(comb(d, 2) + (k - d) for d in spokes.values())

    context = {
        "w": w, "size_W": len(members), "k": k,
        "refined_bound": refined,
        "rainbow_free": not find_rainbow_triangle(g).found,
        "classes_within_k": g.max_class_size <= k,
    }
    return BoundReport("claim_neighbourhood", Fraction(e_w), rhs, "<=", e_w <= rhs, context)


def bound_suite(max_n: int = 7, progress: bool = False) -> dict:
    """모든 동형류에 대해 Goodman / 안정성 하한 전수 검사

    삼각형 개수는 numpy trace(A³)/6 과 교차검증한다.
    """
    from modules.graph_enumerator import graphs_by_edge_count

    summary = {"max_n": max_n, "per_n": {}, "violations": []}
    for n in range(1, max_n + 1):
        stats = {"classes": 0, "goodman_checked": 0, "ls_checked": 0}
        levels = graphs_by_edge_count(n)
        if progress:
            levels = tqdm(levels, total=n * (n - 1) // 2 + 1, desc=f"n={n}", leave=False)

        for m, level in levels:
            for graph in level:
                stats["classes"] += 1
                t = triangle_count(graph)
                if t != triangle_count_matrix(graph):
                    raise InternalConsistencyError(f"삼각형 개수 불일치 (n={n}, 간선={graph.edges})")

                report = check_goodman(graph)
                stats["goodman_checked"] += 1
                if not report.holds:
                    summary["violations"].append({"bound": "goodman", "n": n, "edges": graph.edges})

                try:
                    report = check_ls_stability(graph)
                except PreconditionError:
                    continue
                stats["ls_checked"] += 1
                if not report.holds:
                    summary["violations"].append({"bound": "ls_stability", "n": n, "edges": graph.edges})

        summary["per_n"][n] = stats
    return summary


# 테스트 코드
if __name__ == "__main__":
    print("📊 goodman(5, 8) =", goodman_lower_bound(5, 8))
    print("📊 chapprox(24, 27, 8) =", chapprox_forces_rainbow(24, 27, 8).to_dict())
    print("📊 ls(6, 10) =", ls_stability_bound(6, 10).to_dict())
