"""
구조 추출 파이프라인
- 임계값 n1(k), n2(k) 와 간선 수 가설
- 최소 차수 벗겨내기 (차수 < ⌊현재 n/2⌋ 인 정점 반복 제거)
- 최대 절단 (정확 분기한정 / 비우호 국소탐색)
- 분할 결론 확인 (X 독립, G[Y] 요소 크기 ≤ k)
- 재구성: 벗긴 정점 재추가 → Y 요소 완성/병합 → X-Y 간선 채우기 → H^k_{|X|,|Y|}
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from modules.coloured_graph import (
    SimpleGraph, components, induced_counts, iter_bits, mask_components, mask_of,
)
from modules.constructions import _h_graph
from modules.errors import InternalConsistencyError, PreconditionError


def _pop(x: int) -> int:
    return bin(x).count("1")


# ----------------------------------------------------------------------
# 임계값 / 가설
# ----------------------------------------------------------------------

def thresholds(k: int) -> Tuple[int, int]:
    """n1 = 6k⁵(k+1)², n2 = n1²"""
    if k < 1:
        raise PreconditionError(f"k 는 1 이상이어야 합니다: {k}")
    n1 = 6 * k ** 5 * (k + 1) ** 2
    return n1, n1 * n1


def edge_hypothesis(n: int, m: int, k: int) -> bool:
    """m ≥ n²/4 + (k-1)n/4 - k(k-1)/2 (양변 4배 정수 비교)"""
    return 4 * m >= n * n + (k - 1) * n - 2 * k * (k - 1)


# ----------------------------------------------------------------------
# 벗겨내기
# ----------------------------------------------------------------------

@dataclass
class PeelTrace:
    """removals: (정점, 제거 시 차수, 제거 시 정점 수)"""

    n: int
    m: int
    removals: List[Tuple[int, int, int]]
    U: frozenset
    n_final: int
    m_final: int
    checked: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "removals": [
                {"vertex": v, "degree": d, "vertex_count": c} for v, d, c in self.removals
            ],
            "U": sorted(self.U),
            "n_final": self.n_final,
            "m_final": self.m_final,
            "checked": self.checked,
        }


def peel(g, k: int, checked: bool = True) -> PeelTrace:
    """차수 < ⌊현재 n/2⌋ 인 정점을 (최소 차수, 최소 번호) 순으로 반복 제거

    checked 모드는 n ≥ 2k 와 간선 수 가설을 요구하고,
    매 제거 후 가설 유지와 마지막 n'² ≥ n 을 확인한다.
    """
    if checked and not (g.n >= 2 * k and edge_hypothesis(g.n, g.m, k)):
        raise PreconditionError(
            f"벗겨내기 전제조건 위반: n={g.n}, m={g.m}, k={k} (n ≥ 2k, 간선 수 가설 필요)")

    alive = mask_of(range(g.n))
    count, edges = g.n, g.m
    removals = []

    while True:
        threshold = count // 2
        victim = None
        for v in iter_bits(alive):
            d = _pop(g.adj[v] & alive)
            if d < threshold and (victim is None or d < victim[1]):
                victim = (v, d)
        if victim is None:
            break

        v, d = victim
        removals.append((v, d, count))
        alive &= ~(1 << v)
        count -= 1
        edges -= d
        if checked and not edge_hypothesis(count, edges, k):
            raise InternalConsistencyError(
                f"정점 {v} 제거 후 간선 수 가설이 깨졌습니다 (n={count}, m={edges})")

    if checked and count * count < g.n:
        raise InternalConsistencyError(f"남은 정점 수 {count} 의 제곱이 n={g.n} 보다 작습니다")

    return PeelTrace(g.n, g.m, removals, frozenset(iter_bits(alive)), count, edges, checked)


# ----------------------------------------------------------------------
# 분할 보고
# ----------------------------------------------------------------------

@dataclass
class PartitionReport:
    X: Tuple[int, ...]
    Y: Tuple[int, ...]
    x_independent: bool
    max_component_Y: int
    cut_size: int
    missing_cross: int
    a_X: Fraction
    a_Y: Fraction
    unfriendly: bool
    satisfies_lemma: bool
    k: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "X": list(self.X),
            "Y": list(self.Y),
            "x_independent": self.x_independent,
            "max_component_Y": self.max_component_Y,
            "cut_size": self.cut_size,
            "missing_cross": self.missing_cross,
            "a_X": self.a_X,
            "a_Y": self.a_Y,
            "unfriendly": self.unfriendly,
            "satisfies_lemma": self.satisfies_lemma,
            "k": self.k,
        }


def _is_unfriendly(g, x_mask: int, y_mask: int) -> bool:
    for v in iter_bits(x_mask):
        if _pop(g.adj[v] & x_mask) > _pop(g.adj[v] & y_mask):
            return False
    for v in iter_bits(y_mask):
        if _pop(g.adj[v] & y_mask) > _pop(g.adj[v] & x_mask):
            return False
    return True


def check_lemma_conclusion(g, X: Iterable[int], Y: Iterable[int], k: Optional[int],
                           within: Optional[Iterable[int]] = None) -> PartitionReport:
    """{X,Y} 가 within(기본 V) 의 분할인지 확인하고 모든 값을 직접 계산

    k 가 None 이면 satisfies_lemma 는 X 독립 여부만 본다.
    """
    X, Y = sorted(set(X)), sorted(set(Y))
    x_mask, y_mask = mask_of(X), mask_of(Y)
    target = mask_of(range(g.n)) if within is None else mask_of(within)
    if x_mask & y_mask or (x_mask | y_mask) != target:
        raise PreconditionError("X, Y 가 정점 집합의 분할이 아닙니다")

    e_x, e_y, e_xy, missing = induced_counts(g, X, Y)
    comp_sizes = [len(c) for c in components(g, Y)]
    max_comp = max(comp_sizes, default=0)
    x_independent = e_x == 0
    satisfies = x_independent and (k is None or max_comp <= k)

    return PartitionReport(
        X=tuple(X), Y=tuple(Y),
        x_independent=x_independent, max_component_Y=max_comp,
        cut_size=e_xy, missing_cross=missing,
        a_X=Fraction(2 * e_x, len(X)) if X else Fraction(0),
        a_Y=Fraction(2 * e_y, len(Y)) if Y else Fraction(0),
        unfriendly=_is_unfriendly(g, x_mask, y_mask),
        satisfies_lemma=satisfies, k=k,
    )


# ----------------------------------------------------------------------
# 최대 절단
# ----------------------------------------------------------------------

def _max_component(adj: List[int], mask: int) -> int:
    return max((len(c) for c in mask_components(adj, mask)), default=0)


def _inner_edges(adj: List[int], mask: int) -> int:
    return sum(_pop(adj[v] & mask) for v in iter_bits(mask)) // 2


class _ExactCut:
    """분기한정: (절단 크기, -min(e(X),e(Y)), -최대 요소) 를 사전순 최대화

    정점 순서는 차수 내림차순, 첫 정점은 0번 쪽에 고정.
    """

    def __init__(self, g, vertices: List[int]):
        self.adj = g.adj
        self.whole = mask_of(vertices)
        self.order = sorted(vertices, key=lambda v: (-_pop(self.adj[v] & self.whole), v))
        self.best = None            # (key, s0, s1)

    def _upper_bound(self, s0: int, s1: int, cut: int) -> int:
        rest = self.whole & ~(s0 | s1)
        extra = sum(max(_pop(self.adj[v] & s0), _pop(self.adj[v] & s1)) for v in iter_bits(rest))
        size = _pop(rest)
        return cut + extra + min(_inner_edges(self.adj, rest), size * size // 4)

    def _dominated(self, ub: int, s0: int, s1: int, e0: int, e1: int) -> bool:
        if self.best is None:
            return False
        best_cut, neg_sec, neg_tert = self.best[0]
        if ub != best_cut:
            return ub < best_cut
        sec = min(e0, e1)
        if sec != -neg_sec:
            return sec > -neg_sec
        tert = max(_max_component(self.adj, s0), _max_component(self.adj, s1))
        return tert >= -neg_tert

    def search(self, i: int = 0, s0: int = 0, s1: int = 0, cut: int = 0, e0: int = 0, e1: int = 0):
        if self._dominated(self._upper_bound(s0, s1, cut), s0, s1, e0, e1):
            return
        if i == len(self.order):
            tert = max(_max_component(self.adj, s0), _max_component(self.adj, s1))
            self.best = ((cut, -min(e0, e1), -tert), s0, s1)
            return

        v = self.order[i]
        n0, n1 = _pop(self.adj[v] & s0), _pop(self.adj[v] & s1)
        bit = 1 << v
        into_0 = (s0 | bit, s1, cut + n1, e0 + n0, e1)
        into_1 = (s0, s1 | bit, cut + n0, e0, e1 + n1)
        if i == 0:
            options = [into_0]
        elif n1 >= n0:
            options = [into_0, into_1]
        else:
            options = [into_1, into_0]
        for s0_, s1_, cut_, e0_, e1_ in options:
            self.search(i + 1, s0_, s1_, cut_, e0_, e1_)


def _unfriendly_cut(g, vertices: List[int]) -> Tuple[int, int]:
    """탐욕 배치 후, 자기 쪽 이웃이 더 많은 최소 번호 정점을 뒤집기 반복"""
    adj = g.adj
    s0 = s1 = 0
    for v in vertices:
        if _pop(adj[v] & s0) <= _pop(adj[v] & s1):
            s0 |= 1 << v
        else:
            s1 |= 1 << v

    while True:
        for v in vertices:
            own, other = (s0, s1) if s0 >> v & 1 else (s1, s0)
            if _pop(adj[v] & own) > _pop(adj[v] & other):
                if s0 >> v & 1:
                    s0, s1 = s0 & ~(1 << v), s1 | 1 << v
                else:
                    s1, s0 = s1 & ~(1 << v), s0 | 1 << v
                break
        else:
            return s0, s1


def _orient(g, s0: int, s1: int) -> Tuple[int, int]:
    """평균 차수가 작은 쪽이 X (같으면 최소 번호 정점이 있는 쪽)"""
    e0, e1 = _inner_edges(g.adj, s0), _inner_edges(g.adj, s1)
    size0, size1 = _pop(s0), _pop(s1)
    left, right = e0 * size1, e1 * size0
    if left < right:
        return s0, s1
    if right < left:
        return s1, s0
    low0 = (s0 & -s0).bit_length() if s0 else float("inf")
    low1 = (s1 & -s1).bit_length() if s1 else float("inf")
    return (s0, s1) if low0 <= low1 else (s1, s0)


def max_cut(g, mode: str = "exact", within: Optional[Iterable[int]] = None,
            ceiling: int = 24, k: Optional[int] = None) -> PartitionReport:
    """G[within] 의 최대 절단 (exact) 또는 비우호 분할 (unfriendly)

    exact 모드는 최대 절단 중 min(e(X), e(Y)) 가 가장 작고,
    그다음 양쪽 최대 연결요소가 가장 작은 것을 고른다.
    """
    vertices = sorted(range(g.n) if within is None else set(within))
    if mode == "exact":
        if len(vertices) > ceiling:
            raise PreconditionError(f"정확 최대 절단 상한 {ceiling} 초과: n={len(vertices)}")
        solver = _ExactCut(g, vertices)
        solver.search()
        if solver.best is None:
            s0 = s1 = 0
        else:
            _, s0, s1 = solver.best
    elif mode == "unfriendly":
        s0, s1 = _unfriendly_cut(g, vertices)
    else:
        raise PreconditionError(f"알 수 없는 절단 모드: {mode}")

    x_mask, y_mask = _orient(g, s0, s1)
    report = check_lemma_conclusion(g, iter_bits(x_mask), iter_bits(y_mask), k, within=vertices)
    if not report.unfriendly:
        raise InternalConsistencyError(f"{mode} 절단이 비우호 조건을 만족하지 않습니다")
    return report


# ----------------------------------------------------------------------
# 재구성
# ----------------------------------------------------------------------

@dataclass
class RebuildResult:
    graph: SimpleGraph
    X: Tuple[int, ...]
    Y: Tuple[int, ...]
    initial_edges: int
    final_edges: int
    steps: List[dict] = field(default_factory=list)
    isomorphic_to_h: bool = False

    def to_dict(self) -> dict:
        return {
            "X": list(self.X),
            "Y": list(self.Y),
            "initial_edges": self.initial_edges,
            "final_edges": self.final_edges,
            "steps": list(self.steps),
            "isomorphic_to_h": self.isomorphic_to_h,
            "edges": [list(e) for e in self.graph.edges],
        }


class _Surgeon:
    """가상 간선 수 = 현재 간선 수 + 아직 돌아오지 않은 정점들의 제거 시 차수 합"""

    def __init__(self, g, trace: PeelTrace, X, Y):
        self.n = g.n
        self.adj = [0] * g.n
        for edge in g.edges:
            u, v = edge[0], edge[1]
            if u in trace.U and v in trace.U:
                self.adj[u] |= 1 << v
                self.adj[v] |= 1 << u
        self.x_mask, self.y_mask = mask_of(X), mask_of(Y)
        self.pending = sum(d for _, d, _ in trace.removals)
        self.steps: List[dict] = []
        self.virtual = self.edges() + self.pending

    def edges(self) -> int:
        return sum(_pop(a) for a in self.adj) // 2

    def add(self, u: int, v: int):
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def drop(self, u: int, v: int):
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)

    def record(self, kind: str, **detail):
        value = self.edges() + self.pending
        if value <= self.virtual:
            raise InternalConsistencyError(
                f"재구성 단계 '{kind}' 에서 간선 수가 늘지 않았습니다 ({self.virtual} → {value})")
        self.virtual = value
        self.steps.append({"step": kind, "edges": value, **detail})


def rebuild_surgery(g, trace: PeelTrace, X: Iterable[int], Y: Iterable[int], k: int) -> RebuildResult:
    """벗긴 정점을 되돌리고 H^k_{|X|,|Y|} 로 다듬기

    (i) 제거 역순으로 작은 쪽(같으면 X)에 추가, 반대쪽 전체와 연결
    (ii) Y 요소를 클리크로 완성, 크기 < k 인 요소 둘이 있으면
         가장 작은 요소(같으면 번호 큰 요소)의 최대 번호 정점을 가장 큰 요소로 이동
    (iii) 빠진 X-Y 간선 추가
    """
    X, Y = sorted(set(X)), sorted(set(Y))
    report = check_lemma_conclusion(g, X, Y, k, within=trace.U)
    if not report.satisfies_lemma:
        raise PreconditionError("X 독립 / G[Y] 요소 크기 ≤ k 조건을 만족하지 않습니다")

    doc = _Surgeon(g, trace, X, Y)
    initial = doc.virtual

    # 1. 벗긴 정점 되돌리기
    for v, d, _ in reversed(trace.removals):
        doc.pending -= d
        if _pop(doc.x_mask) <= _pop(doc.y_mask):
            side, other = "X", doc.y_mask
            doc.x_mask |= 1 << v
        else:
            side, other = "Y", doc.x_mask
            doc.y_mask |= 1 << v
        for u in iter_bits(other):
            doc.add(u, v)
        doc.record("readd", vertex=v, side=side)

    # 2-1. Y 요소를 클리크로
    for comp in _components_of(doc, doc.y_mask):
        members = sorted(comp)
        missing = [(u, w) for i, u in enumerate(members) for w in members[i + 1:]
                   if not doc.adj[u] >> w & 1]
        if missing:
            for u, w in missing:
                doc.add(u, w)
            doc.record("complete", component=members, added=len(missing))

    # 2-2. 작은 클리크 병합
    while True:
        small = [sorted(c) for c in _components_of(doc, doc.y_mask) if len(c) < k]
        if len(small) < 2:
            break
        first = max(range(len(small)), key=lambda i: (len(small[i]), -i))
        rest = [i for i in range(len(small)) if i != first]
        second = min(rest, key=lambda i: (len(small[i]), -i))
        h1, h2 = small[first], small[second]
        v = h2[-1]
        for u in h2[:-1]:
            doc.drop(u, v)
        for u in h1:
            doc.add(u, v)
        doc.record("merge", vertex=v, into=h1, source=h2)

    # 3. X-Y 간선 채우기
    added = 0
    for x in iter_bits(doc.x_mask):
        for y in iter_bits(doc.y_mask & ~doc.adj[x]):
            doc.add(x, y)
            added += 1
    if added:
        doc.record("join", added=added)

    pairs = [(u, v) for u in range(doc.n) for v in iter_bits(doc.adj[u] >> (u + 1) << (u + 1))]
    simple = SimpleGraph(doc.n, tuple(pairs))
    size_x, size_y = _pop(doc.x_mask), _pop(doc.y_mask)
    target = _h_graph(size_x, size_y, k)
    isomorphic = nx.is_isomorphic(
        simple.to_networkx(), SimpleGraph(target.n, tuple((u, v) for u, v, _ in target.edges)).to_networkx())
    if not isomorphic:
        raise InternalConsistencyError(f"재구성 결과가 H^{k}_({size_x},{size_y}) 와 동형이 아닙니다")

    return RebuildResult(
        graph=simple, X=tuple(iter_bits(doc.x_mask)), Y=tuple(iter_bits(doc.y_mask)),
        initial_edges=initial, final_edges=simple.m, steps=doc.steps, isomorphic_to_h=True,
    )


def _components_of(doc: _Surgeon, mask: int) -> List[frozenset]:
    return mask_components(doc.adj, mask)


# ----------------------------------------------------------------------
# 파이프라인
# ----------------------------------------------------------------------

@dataclass
class PipelineReport:
    k: int
    hypothesis: bool
    trace: PeelTrace
    partition: PartitionReport
    rebuild: Optional[RebuildResult] = None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "edge_hypothesis": self.hypothesis,
            "peel": self.trace.to_dict(),
            "partition": self.partition.to_dict(),
            "rebuild": self.rebuild.to_dict() if self.rebuild else None,
        }


def run_pipeline(g, k: int, cut_mode: str = "exact", cut_ceiling: int = 24) -> PipelineReport:
    """벗겨내기 → 최대 절단 → 결론 확인 → (만족하면) 재구성

    작은 n 에서 결론이 성립하지 않아도 그대로 보고만 한다.
    """
    hypothesis = g.n >= 2 * k and edge_hypothesis(g.n, g.m, k)

    # 1. 벗겨내기
    trace = peel(g, k, checked=hypothesis)

    # 2. G[U] 최대 절단 + 결론 확인
    partition = max_cut(g, cut_mode, within=trace.U, ceiling=cut_ceiling, k=k)

    # 3. 재구성
    rebuild = None
    if partition.satisfies_lemma:
        rebuild = rebuild_surgery(g, trace, partition.X, partition.Y, k)

    return PipelineReport(k, hypothesis, trace, partition, rebuild)


# 테스트 코드
if __name__ == "__main__":
    from modules.constructions import build_H

    print("📊 임계값:", [thresholds(k) for k in (1, 2, 3)])
    report = run_pipeline(build_H(3, 3, 2), 2)
    print("✅ H(3,3,2):", report.partition.to_dict())
