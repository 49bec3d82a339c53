"""
무지개 삼각형 / 짧은 무지개 사이클 탐지
- 인증서(Found/Absent) 반환, 독립 검증기 제공
- 방향 그래프 → 색칠 그래프 변환 (색 = 각 정점의 나가는 별)
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx

from modules.coloured_graph import ColouredGraph, Digraph, iter_bits, to_networkx
from modules.errors import PreconditionError


@dataclass(frozen=True)
class RainbowCertificate:
    """Found: 사이클 정점/색 목록, Absent: 확인한 길이 상한 r"""

    found: bool
    r: int
    vertices: Tuple[int, ...] = ()
    colours: Tuple[int, ...] = ()

    @classmethod
    def absent(cls, r: int) -> "RainbowCertificate":
        return cls(False, r)

    def to_dict(self) -> dict:
        if not self.found:
            return {"result": "absent", "r": self.r}
        return {
            "result": "found",
            "r": self.r,
            "vertices": list(self.vertices),
            "colours": list(self.colours),
        }


def _cycle_colours(g: ColouredGraph, cycle: List[int]) -> List[int]:
    return [g.colour_of(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def find_rainbow_triangle(g: ColouredGraph) -> RainbowCertificate:
    """간선 (u,v) 마다 공통 이웃 w > v 를 비트셋 교집합으로 확인"""
    adj = g.adj
    for u, v, c_uv in g.edges:
        common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
        for w in iter_bits(common):
            c_vw = g.colour_of(v, w)
            c_wu = g.colour_of(u, w)
            if c_uv != c_vw and c_vw != c_wu and c_uv != c_wu:
                return RainbowCertificate(True, 3, (u, v, w), (c_uv, c_vw, c_wu))
    return RainbowCertificate.absent(3)


def find_rainbow_cycle_upto(g: ColouredGraph, r: int) -> RainbowCertificate:
    """길이 r 이하 무지개 사이클 전수 탐색

    시작점은 사이클의 최소 정점, 방향은 path[1] < path[-1] 인 쪽만 인정한다.
    """
    if r < 3:
        raise PreconditionError(f"사이클 길이 상한 r 은 3 이상이어야 합니다: {r}")

    adj = g.adj
    limit = min(r, g.n)

    def extend(path: List[int], visited: int, used: int, start: int) -> Optional[List[int]]:
        x = path[-1]
        if len(path) >= 3 and adj[x] >> start & 1 and path[1] < x:
            if not used >> g.colour_of(x, start) & 1:
                return list(path)
        if len(path) == limit:
            return None
        higher = adj[x] & ~visited & ~((1 << (start + 1)) - 1)
        for w in iter_bits(higher):
            c = g.colour_of(x, w)
            if used >> c & 1:
                continue
            path.append(w)
            found = extend(path, visited | 1 << w, used | 1 << c, start)
            path.pop()
            if found:
                return found
        return None

    for start in range(g.n):
        cycle = extend([start], 1 << start, 0, start)
        if cycle:
            return RainbowCertificate(True, r, tuple(cycle), tuple(_cycle_colours(g, cycle)))
    return RainbowCertificate.absent(r)


def brute_force_rainbow_triangle(g: ColouredGraph) -> bool:
    """모든 정점 삼중쌍 검사 (교차검증용)"""
    for u, v, w in combinations(range(g.n), 3):
        if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w):
            if len({g.colour_of(u, v), g.colour_of(v, w), g.colour_of(u, w)}) == 3:
                return True
    return False


def verify_certificate(g: ColouredGraph, cert: RainbowCertificate) -> bool:
    """인증서 독립 검증

    Found 는 사이클/색을 직접 확인, Absent 는 networkx 사이클 열거로 재확인
    """
    if cert.found:
        cycle = list(cert.vertices)
        if len(cycle) < 3 or len(cycle) > cert.r or len(set(cycle)) != len(cycle):
            return False
        for i, u in enumerate(cycle):
            v = cycle[(i + 1) % len(cycle)]
            if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
                return False
        colours = _cycle_colours(g, cycle)
        return list(cert.colours) == colours and len(set(colours)) == len(colours)

    if cert.r == 3:
        return not brute_force_rainbow_triangle(g)
    graph = to_networkx(g)
    for cycle in nx.simple_cycles(graph, length_bound=cert.r):
        if len(cycle) >= 3 and len(set(_cycle_colours(g, cycle))) == len(cycle):
            return False
    return True


def digraph_to_coloured(d: Digraph) -> ColouredGraph:
    """나가는 별 δ⁺(v) 들을 색 분할로

    색 번호는 나가는 호가 있는 꼬리 정점의 오름차순.
    """
    arc_set = set(d.arcs)
    for u, v in d.arcs:
        if (v, u) in arc_set:
            raise PreconditionError(f"양방향 호 쌍 ({u}, {v}) 는 평행 간선이 됩니다")

    tails = sorted({u for u, _ in d.arcs})
    colour_of_tail = {t: i for i, t in enumerate(tails)}
    return ColouredGraph.build(d.n, ((u, v, colour_of_tail[u]) for u, v in d.arcs), relabel=False)


def has_directed_cycle_upto(d: Digraph, r: int) -> bool:
    """길이 r 이하 방향 사이클 존재 여부 (networkx 기준)"""
    return any(True for _ in nx.simple_cycles(d.to_networkx(), length_bound=r))


@dataclass
class ConjectureVerdict:
    """색 수 n 이상, 모든 색 크기 n/r 이상이면 길이 r 이하 무지개 사이클이 있어야 한다"""

    n: int
    r: int
    p: int
    min_class_size: int
    enough_classes: bool
    sizes_ok_exact: bool
    sizes_ok_ceiling: bool
    hypotheses_hold: bool
    certificate: RainbowCertificate
    counterexample: bool = field(default=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "p": self.p,
            "min_class_size": self.min_class_size,
            "enough_classes": self.enough_classes,
            "sizes_ok_exact": self.sizes_ok_exact,
            "sizes_ok_ceiling": self.sizes_ok_ceiling,
            "hypotheses_hold": self.hypotheses_hold,
            "certificate": self.certificate.to_dict(),
            "counterexample": self.counterexample,
        }


def check_conjecture_instance(g: ColouredGraph, r: int) -> ConjectureVerdict:
    """가설 확인 + 무지개 사이클 탐색

    크기 비교는 size·r ≥ n (정수), 올림 판정은 size ≥ ⌈n/r⌉ 로 따로 보고한다.
    """
    if r < 1:
        raise PreconditionError(f"r 은 1 이상이어야 합니다: {r}")

    sizes = g.class_sizes
    min_size = min(sizes, default=0)
    ceiling = -(-g.n // r)
    enough = g.p >= g.n
    exact_ok = all(s * r >= g.n for s in sizes)
    ceiling_ok = all(s >= ceiling for s in sizes)
    hypotheses = g.n >= 1 and enough and exact_ok

    if r < 3:
        cert = RainbowCertificate.absent(r)
    elif r == 3:
        cert = find_rainbow_triangle(g)
    else:
        cert = find_rainbow_cycle_upto(g, r)

    return ConjectureVerdict(
        n=g.n, r=r, p=g.p, min_class_size=min_size,
        enough_classes=enough, sizes_ok_exact=exact_ok, sizes_ok_ceiling=ceiling_ok,
        hypotheses_hold=hypotheses, certificate=cert,
        counterexample=hypotheses and not cert.found,
    )


# 테스트 코드
if __name__ == "__main__":
    k3 = ColouredGraph.build(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
    print("🔍 K3 무지개:", find_rainbow_triangle(k3).to_dict())
    star = digraph_to_coloured(Digraph.build(4, [(0, 1), (0, 2), (0, 3)]))
    print("🔍 별:", star, find_rainbow_triangle(star).to_dict())
