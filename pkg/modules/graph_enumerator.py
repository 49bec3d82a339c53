"""
n정점 그래프 동형류 열거 (간선 수 내림차순)
- K_n 에서 시작해 각 대표에서 간선 하나씩 지운 그래프를 다음 단계 후보로
- WL 해시로 묶은 뒤 networkx 동형 판정으로 중복 제거
"""

from typing import Dict, Iterator, List, Tuple

import networkx as nx

from modules.coloured_graph import SimpleGraph

WL_ITERATIONS = 3


def _next_level(level: List[SimpleGraph]) -> List[SimpleGraph]:
    """간선 하나 적은 동형류 (처음 본 대표 유지)"""
    buckets: Dict[str, List[nx.Graph]] = {}
    result = []
    for graph in level:
        for dropped in graph.edges:
            child = SimpleGraph(graph.n, tuple(e for e in graph.edges if e != dropped))
            nx_child = child.to_networkx()
            key = nx.weisfeiler_lehman_graph_hash(nx_child, iterations=WL_ITERATIONS)
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(nx_child, other) for other in bucket):
                continue
            bucket.append(nx_child)
            result.append(child)
    return result


def graphs_by_edge_count(n: int) -> Iterator[Tuple[int, List[SimpleGraph]]]:
    """(m, 해당 간선 수의 동형류 대표 목록) 을 m = C(n,2) 부터 0 까지"""
    m = n * (n - 1) // 2
    level = [SimpleGraph.complete(n)]
    yield m, level
    while m > 0:
        level = _next_level(level)
        m -= 1
        yield m, level


def isomorphism_classes(n: int) -> List[SimpleGraph]:
    return [graph for _, level in graphs_by_edge_count(n) for graph in level]


# 테스트 코드
if __name__ == "__main__":
    for n in range(1, 7):
        print(f"📊 n={n}: 동형류 {len(isomorphism_classes(n))}개")
