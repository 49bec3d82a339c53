"""
극값 구성 생성기
- H^k_{a,b}: 완전이분 (A,B) + B 위의 k-클리크들
- 사이클 거듭제곱 / z 정점 예제 / 바퀴 예제
- 2k | b 일 때 색을 합쳐 모든 색 크기를 정확히 k 로
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from modules.coloured_graph import ColouredGraph
from modules.errors import PreconditionError


@dataclass(frozen=True)
class HFamily:
    a: int
    b: int
    k: int


@dataclass(frozen=True)
class CyclePower:
    k: int
    r: int


@dataclass(frozen=True)
class ZVertex:
    k: int
    r: int


@dataclass(frozen=True)
class WheelExample:
    k: int


ConstructionSpec = Union[HFamily, CyclePower, ZVertex, WheelExample]


def _require_positive(**params):
    for name, value in params.items():
        if value < 1:
            raise PreconditionError(f"{name} 는 1 이상이어야 합니다: {value}")


def h_cliques(a: int, b: int, k: int) -> List[List[int]]:
    """B 위 클리크 블록 (크기 k, 나머지 클리크는 마지막)"""
    blocks = []
    start = a
    for _ in range(b // k):
        blocks.append(list(range(start, start + k)))
        start += k
    if b % k:
        blocks.append(list(range(start, a + b)))
    return blocks


def _h_coloured_edges(a: int, b: int, k: int) -> List[List[Tuple[int, int]]]:
    """H^k_{a,b} 의 색 분할 (색 하나 = 간선 목록 하나)"""
    classes = []
    cliques = h_cliques(a, b, k)

    # 1. A 정점 v 와 클리크 B_i 사이
    for v in range(a):
        for block in cliques:
            classes.append([(v, u) for u in block])

    # 2. 클리크 내부: u_j 와 뒤쪽 정점들
    for block in cliques:
        for j, u in enumerate(block[:-1]):
            classes.append([(u, w) for w in block[j + 1:]])
    return classes


def _h_graph(a: int, b: int, k: int) -> ColouredGraph:
    triples = [(u, v, c) for c, cls_ in enumerate(_h_coloured_edges(a, b, k)) for u, v in cls_]
    return ColouredGraph.build(a + b, triples)


def build_H(a: int, b: int, k: int) -> ColouredGraph:
    """H^k_{a,b} (A = 0..a-1, B = a..a+b-1)"""
    _require_positive(a=a, b=b, k=k)
    return _h_graph(a, b, k)


def build_cycle_power(k: int, r: int) -> ColouredGraph:
    """n = kr+1, C_i = {v_i v_{i+j} : 1 ≤ j ≤ k}"""
    _require_positive(k=k)
    if r < 3:
        raise PreconditionError(f"r 은 3 이상이어야 합니다: {r}")
    n = k * r + 1
    triples = [(i, (i + j) % n, i) for i in range(n) for j in range(1, k + 1)]
    return ColouredGraph.build(n, triples)


def build_z_vertex(k: int, r: int) -> ColouredGraph:
    """n = kr+2, 사이클 거듭제곱의 각 색 C_i 에 간선 v_i z 추가 (z 는 마지막 정점)"""
    _require_positive(k=k)
    if r < 3:
        raise PreconditionError(f"r 은 3 이상이어야 합니다: {r}")
    cycle_len = k * r + 1
    z = cycle_len
    triples = [(i, (i + j) % cycle_len, i) for i in range(cycle_len) for j in range(1, k + 1)]
    triples.extend((i, z, i) for i in range(cycle_len))
    return ColouredGraph.build(cycle_len + 1, triples)


def build_wheel_example(k: int) -> ColouredGraph:
    """사이클 v_1..v_{3k-2} + 중심 z, C_i = {v_i v_{i+j} : 1 ≤ j ≤ k-1} ∪ {v_i z}

    첨자는 mod 3k-2, 나머지 0 은 v_{3k-2}. 0-기반 정점 i-1 이 v_i, z 는 3k-2.
    """
    if k < 2:
        raise PreconditionError(f"바퀴 예제는 k ≥ 2 가 필요합니다: {k}")
    cycle_len = 3 * k - 2
    z = cycle_len
    triples = []
    for i in range(cycle_len):
        triples.extend((i, (i + j) % cycle_len, i) for j in range(1, k))
        triples.append((i, z, i))
    return ColouredGraph.build(cycle_len + 1, triples)


def merge_to_exact_k(a: int, b: int, k: int) -> ColouredGraph:
    """build_H(a,b,k) 의 클리크 내부 색을 두 클리크씩 짝지어 크기 k 로 합침

    앞 클리크의 크기 j 색 + 다음 클리크의 크기 k-j 색
    """
    _require_positive(a=a, b=b, k=k)
    if b % (2 * k):
        raise PreconditionError(f"b={b} 가 2k={2 * k} 로 나누어떨어지지 않습니다")

    classes = []
    cliques = h_cliques(a, b, k)
    for v in range(a):
        for block in cliques:
            classes.append([(v, u) for u in block])

    for first, second in zip(cliques[0::2], cliques[1::2]):
        for j in range(1, k):
            # 크기 j 색: u_{k-j} 에서 뒤쪽 j 개
            small = [(first[k - j - 1], w) for w in first[k - j:]]
            large = [(second[j - 1], w) for w in second[j:]]
            classes.append(small + large)

    triples = [(u, v, c) for c, cls_ in enumerate(classes) for u, v in cls_]
    return ColouredGraph.build(a + b, triples)


def build(spec: ConstructionSpec) -> ColouredGraph:
    """ConstructionSpec 에 맞는 생성기 호출"""
    if isinstance(spec, HFamily):
        return build_H(spec.a, spec.b, spec.k)
    if isinstance(spec, CyclePower):
        return build_cycle_power(spec.k, spec.r)
    if isinstance(spec, ZVertex):
        return build_z_vertex(spec.k, spec.r)
    if isinstance(spec, WheelExample):
        return build_wheel_example(spec.k)
    raise PreconditionError(f"알 수 없는 구성: {spec!r}")


# 테스트 코드
if __name__ == "__main__":
    print("=" * 70)
    for spec in [HFamily(2, 3, 2), CyclePower(2, 3), ZVertex(2, 3), WheelExample(3)]:
        g = build(spec)
        print(f"📊 {spec}: n={g.n}, m={g.m}, 색 크기={sorted(set(g.class_sizes))}")
    print("=" * 70)
