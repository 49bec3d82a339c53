"""
무지개 삼각형 없는 완전 색칠 그래프의 Gallai 분할
- 블록 쌍 사이 간선은 한 가지 색, 블록 사이 간선 전체는 최대 2색
- 블록 수 최소, 같으면 정점 0 을 포함한 블록(정렬 튜플)이 사전순 최소인 것
- 최대 색 크기 ≥ n-1 확인 (분할 블록 수에 따라 세 경우)
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

import networkx as nx

from modules.bounds import BoundReport
from modules.coloured_graph import ColouredGraph
from modules.errors import InternalConsistencyError, PreconditionError, RainbowTriangleError
from modules.rainbow_detector import find_rainbow_triangle

Blocks = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class GallaiPartition:
    """blocks 는 최소 정점 순, cross_colour 키는 블록 번호 쌍 (i < j)"""

    blocks: Blocks
    cross_colour: Dict[Tuple[int, int], int]

    @property
    def colours(self) -> List[int]:
        return sorted(set(self.cross_colour.values()))

    def to_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "cross_colour": [
                {"blocks": [i, j], "colour": c}
                for (i, j), c in sorted(self.cross_colour.items())
            ],
        }


def _check_preconditions(g: ColouredGraph):
    if g.n < 2:
        raise PreconditionError(f"n ≥ 2 가 필요합니다: n={g.n}")
    if not g.is_complete():
        raise PreconditionError(f"완전 그래프가 아닙니다 (m={g.m}, C(n,2)={comb(g.n, 2)})")
    cert = find_rainbow_triangle(g)
    if cert.found:
        raise RainbowTriangleError(f"무지개 삼각형 {list(cert.vertices)} 이 있습니다", cert)


def _make_partition(g: ColouredGraph, groups: List[List[int]]) -> GallaiPartition:
    blocks = tuple(sorted(tuple(sorted(b)) for b in groups))
    cross = {}
    for i, j in combinations(range(len(blocks)), 2):
        cross[(i, j)] = g.colour_of(blocks[i][0], blocks[j][0])
    return GallaiPartition(blocks, cross)


def _lex_min_union(parts: List[frozenset], n: int) -> Optional[frozenset]:
    """0 을 포함하고 V 가 아닌 요소 합집합 중 정렬 튜플이 사전순 최소인 것"""
    if len(parts) < 2:
        return None
    owner = {v: part for part in parts for v in part}
    chosen = set(owner[0])
    for v in range(n):
        if v in chosen:
            continue
        if v > max(chosen):
            break
        if len(chosen) + len(owner[v]) == n:
            break
        chosen |= owner[v]
    return frozenset(chosen)


def _best_bipartition(g: ColouredGraph) -> Optional[GallaiPartition]:
    """색 c 가 아닌 간선 그래프의 연결요소 합집합 = 교차 간선이 모두 c 인 이분할"""
    best = None
    for c in range(g.p):
        others = nx.Graph()
        others.add_nodes_from(range(g.n))
        others.add_edges_from((u, v) for u, v, col in g.edges if col != c)
        parts = [frozenset(comp) for comp in nx.connected_components(others)]
        side = _lex_min_union(parts, g.n)
        if side is None:
            continue
        key = tuple(sorted(side))
        if best is None or key < best[0]:
            best = (key, side)
    if best is None:
        return None
    side = best[1]
    return _make_partition(g, [sorted(side), sorted(set(range(g.n)) - side)])


def _partitions_with_blocks(g: ColouredGraph, target: int) -> List[List[List[int]]]:
    """블록 수가 정확히 target 인 Gallai 분할 전부 (제한 성장 순서)"""
    n = g.n
    found = []
    block_of = [-1] * n
    members: List[List[int]] = []
    cross: Dict[Tuple[int, int], int] = {}

    def place(v: int):
        if n - v < target - len(members):
            return
        if v == n:
            if len(members) == target:
                found.append([list(b) for b in members])
            return
        options = list(range(len(members)))
        if len(members) < target:
            options.append(len(members))
        for b in options:
            if b == len(members):
                members.append([])
            added = []
            ok = True
            for u in range(v):
                other = block_of[u]
                if other == b:
                    continue
                key = (min(other, b), max(other, b))
                colour = g.colour_of(u, v)
                if key in cross:
                    if cross[key] != colour:
                        ok = False
                        break
                else:
                    cross[key] = colour
                    added.append(key)
                    if len(set(cross.values())) > 2:
                        ok = False
                        break
            if ok:
                block_of[v] = b
                members[b].append(v)
                place(v + 1)
                members[b].pop()
                block_of[v] = -1
            for key in added:
                del cross[key]
            if b == len(members) - 1 and not members[b]:
                members.pop()

    place(0)
    return found


def find_gallai_partition(g: ColouredGraph, ceiling: int = 10) -> GallaiPartition:
    """Gallai 분할 찾기

    Args:
        ceiling: 이분할이 없을 때 전수 탐색을 허용하는 최대 n

    Returns:
        GallaiPartition (블록 2개 이상)
    """
    _check_preconditions(g)

    # 1. 단일 색 절단으로 만들어지는 이분할
    partition = _best_bipartition(g)
    if partition is not None:
        return partition

    # 2. 블록 수를 늘려가며 전수 탐색
    if g.n > ceiling:
        raise PreconditionError(f"이분할이 없고 n={g.n} 이 전수 탐색 상한 {ceiling} 을 넘습니다")
    for target in range(3, g.n + 1):
        candidates = _partitions_with_blocks(g, target)
        if candidates:
            best = min(
                (_make_partition(g, groups) for groups in candidates),
                key=lambda p: (p.blocks[0], p.blocks),
            )
            return best

    raise InternalConsistencyError(f"Gallai 분할을 찾지 못했습니다: {g}")


def verify_gallai_partition(g: ColouredGraph, partition: GallaiPartition) -> bool:
    """블록 분할 / 쌍별 단색 / 교차 색 2개 이하를 간선 전수 확인"""
    blocks = partition.blocks
    if len(blocks) < 2:
        return False
    block_of = {}
    for i, block in enumerate(blocks):
        for v in block:
            if v in block_of:
                return False
            block_of[v] = i
    if sorted(block_of) != list(range(g.n)):
        return False

    seen_colours = set()
    for u, v, c in g.edges:
        i, j = sorted((block_of[u], block_of[v]))
        if i == j:
            continue
        if partition.cross_colour.get((i, j)) != c:
            return False
        seen_colours.add(c)
    return len(seen_colours) <= 2


def lemma_case(g: ColouredGraph, partition: GallaiPartition) -> Tuple[str, int]:
    """(경우 이름, 크기 n-1 이상이 강제되는 색)"""
    n = g.n
    blocks = partition.blocks
    sizes = [len(b) for b in blocks]

    if len(blocks) == 2:
        return "bipartition", partition.cross_colour[(0, 1)]

    if len(blocks) == 3:
        # 세 쌍 중 두 쌍이 같은 색 → 공통 블록과 나머지 사이가 전부 그 색
        for i in range(3):
            j, l = [x for x in range(3) if x != i]
            first = partition.cross_colour[tuple(sorted((i, j)))]
            second = partition.cross_colour[tuple(sorted((i, l)))]
            if first == second:
                return "three_blocks", first
        raise InternalConsistencyError(f"블록 3개인데 교차 색이 3개입니다: {partition}")

    cross_edges = comb(n, 2) - sum(comb(s, 2) for s in sizes)
    if cross_edges < 2 * (n - 1):
        raise InternalConsistencyError(f"교차 간선 {cross_edges} < 2(n-1) = {2 * (n - 1)}")
    counts: Dict[int, int] = {}
    for (i, j), c in partition.cross_colour.items():
        counts[c] = counts.get(c, 0) + sizes[i] * sizes[j]
    forced = max(sorted(counts), key=lambda c: counts[c])
    return "four_or_more_blocks", forced


def max_class_at_least_n_minus_1(g: ColouredGraph, ceiling: int = 10) -> BoundReport:
    """최대 색 크기 ≥ n-1 (증인 색 보고)"""
    partition = find_gallai_partition(g, ceiling)
    if not verify_gallai_partition(g, partition):
        raise InternalConsistencyError(f"Gallai 분할 재검증 실패: {partition}")

    case, forced = lemma_case(g, partition)
    sizes = g.class_sizes
    if sizes[forced] < g.n - 1:
        raise InternalConsistencyError(f"{case}: 색 {forced} 크기 {sizes[forced]} < n-1")

    witness = max(range(len(sizes)), key=lambda c: (sizes[c], -c))
    return BoundReport(
        "max_class_at_least_n_minus_1", sizes[witness], g.n - 1, ">=",
        sizes[witness] >= g.n - 1,
        {"n": g.n, "witness_colour": witness, "case": case,
         "forced_colour": forced, "blocks": [list(b) for b in partition.blocks]},
    )


# 테스트 코드
if __name__ == "__main__":
    g = ColouredGraph.build(4, [(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 1), (1, 3, 1), (2, 3, 2)])
    p = find_gallai_partition(g)
    print("✅ 분할:", p.to_dict(), verify_gallai_partition(g, p))
    print("📊", max_class_at_least_n_minus_1(g).to_dict())
