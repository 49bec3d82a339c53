"""
무지개 삼각형 없는 색칠 가능성 판정 (백트래킹)
- 모든 색 크기 k 이하, 모든 삼각형에서 두 간선이 같은 색
- 간선 순서: 포함된 삼각형 수 내림차순
- 새 색은 항상 다음 번호만 (색 재번호 대칭 제거)
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from modules.bounds import majority_infeasible, triangle_count
from modules.coloured_graph import ColouredGraph, SimpleGraph, graph_to_json, iter_bits
from modules.errors import PreconditionError


@dataclass
class ColouringOutcome:
    """feasible 이 None 이면 노드 한도 도달 (판정 못함)"""

    feasible: Optional[bool]
    colouring: Optional[ColouredGraph]
    nodes: int
    pruned_by: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "colouring": graph_to_json(self.colouring) if self.colouring else None,
            "nodes": self.nodes,
            "pruned_by": self.pruned_by,
        }


class _NodeLimit(Exception):
    pass


class _Backtracker:
    """간선 순서와 삼각형 제약을 미리 계산해 두고 재귀 탐색"""

    def __init__(self, graph: SimpleGraph, k: int, node_limit: Optional[int]):
        self.graph = graph
        self.k = k
        self.node_limit = node_limit
        self.nodes = 0

        triangles = []
        adj = graph.adj
        for u, v in graph.edges:
            for w in iter_bits(adj[u] & adj[v] & ~((1 << (v + 1)) - 1)):
                triangles.append(((u, v), (u, w), (v, w)))

        load = {e: 0 for e in graph.edges}
        for tri in triangles:
            for e in tri:
                load[e] += 1
        self.order = sorted(graph.edges, key=lambda e: (-load[e], e))
        position = {e: i for i, e in enumerate(self.order)}

        # 각 위치에서 완성되는 삼각형의 나머지 두 간선 위치
        self.closing: List[List[Tuple[int, int]]] = [[] for _ in self.order]
        for tri in triangles:
            pos = sorted(position[e] for e in tri)
            self.closing[pos[2]].append((pos[0], pos[1]))

        self.assigned: List[int] = [-1] * len(self.order)
        self.sizes: List[int] = []

    def _candidates(self, i: int) -> List[int]:
        allowed = None
        for j, l in self.closing[i]:
            cj, cl = self.assigned[j], self.assigned[l]
            if cj != cl:
                pair = {cj, cl}
                allowed = pair if allowed is None else allowed & pair
                if not allowed:
                    return []
        if allowed is not None:
            return [c for c in sorted(allowed) if self.sizes[c] < self.k]
        existing = [c for c, s in enumerate(self.sizes) if s < self.k]
        return existing + [len(self.sizes)]

    def _assign(self, i: int, c: int):
        if c == len(self.sizes):
            self.sizes.append(0)
        self.sizes[c] += 1
        self.assigned[i] = c

    def _unassign(self, i: int):
        c = self.assigned[i]
        self.sizes[c] -= 1
        if self.sizes[c] == 0 and c == len(self.sizes) - 1:
            self.sizes.pop()
        self.assigned[i] = -1

    def solutions(self, i: int = 0) -> Iterator[List[int]]:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _NodeLimit()
        if i == len(self.order):
            yield list(self.assigned)
            return
        for c in self._candidates(i):
            self._assign(i, c)
            yield from self.solutions(i + 1)
            self._unassign(i)

    def to_coloured(self, assignment: List[int]) -> ColouredGraph:
        return ColouredGraph.build(
            self.graph.n, ((u, v, c) for (u, v), c in zip(self.order, assignment)))


def colourable_rainbow_free(graph: SimpleGraph, k: int, prune: bool = True,
                            node_limit: Optional[int] = None) -> ColouringOutcome:
    """색 크기 k 이하 + 무지개 삼각형 없는 색칠 찾기

    Args:
        prune: 다수색 상한으로 먼저 걸러냄 (필요조건일 뿐)
        node_limit: 탐색 노드 한도, 넘으면 feasible=None

    Returns:
        ColouringOutcome
    """
    if k < 1:
        raise PreconditionError(f"k 는 1 이상이어야 합니다: {k}")

    if prune and majority_infeasible(triangle_count(graph), graph.m, k):
        return ColouringOutcome(False, None, 0, "majority")

    search = _Backtracker(graph, k, node_limit)
    try:
        for assignment in search.solutions():
            return ColouringOutcome(True, search.to_coloured(assignment), search.nodes)
    except _NodeLimit:
        return ColouringOutcome(None, None, search.nodes)
    return ColouringOutcome(False, None, search.nodes)


def iter_rainbow_free_colourings(graph: SimpleGraph, k: int,
                                 limit: Optional[int] = None) -> Iterator[ColouredGraph]:
    """가능한 색 분할 전부 (색 재번호 차이는 하나로), 백트래킹 순서대로"""
    if k < 1:
        raise PreconditionError(f"k 는 1 이상이어야 합니다: {k}")
    search = _Backtracker(graph, k, None)
    for count, assignment in enumerate(search.solutions()):
        if limit is not None and count >= limit:
            return
        yield search.to_coloured(assignment)


# 테스트 코드
if __name__ == "__main__":
    k4 = SimpleGraph.complete(4)
    for k in (2, 3):
        outcome = colourable_rainbow_free(k4, k)
        print(f"🔍 K4, k={k}: {outcome.feasible} ({outcome.nodes} 노드, {outcome.pruned_by})")
