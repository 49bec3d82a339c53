"""
간선 색칠 그래프 데이터 모델
- ColouredGraph: 단순 그래프 + 간선 색 분할 (색 번호 0..p-1, 빈 색 없음)
- SimpleGraph / Digraph: 색 없는 그래프, 방향 그래프
- 텍스트 교환 형식 ("n p" 헤더 + "u v c" 줄) 과 JSON 미러
"""

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

import networkx as nx
import numpy as np

from modules.errors import GraphFormatError, PreconditionError

VertexSet = FrozenSet[int]
Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """비트마스크의 원소를 오름차순으로"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _adjacency_masks(n: int, pairs: Iterable[Edge]) -> List[int]:
    adj = [0] * n
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


@dataclass(frozen=True, eq=False)
class ColouredGraph:
    """간선 색칠 단순 그래프

    edges 는 (u, v, c) 튜플을 (u, v) 순으로 정렬해 둔 것 (u < v).
    같음 비교는 색 번호가 아니라 색 분할 기준이다.
    """

    n: int
    edges: Tuple[Tuple[int, int, int], ...]

    @classmethod
    def build(cls, n: int, coloured_edges: Iterable[Tuple[int, int, int]],
              relabel: bool = True) -> "ColouredGraph":
        """검증 후 생성

        Args:
            n: 정점 수
            coloured_edges: (u, v, c) 목록, 순서 무관
            relabel: True 면 색을 정렬된 간선 순서의 첫 등장 순으로 0.. 재번호
        """
        if n < 0:
            raise PreconditionError(f"정점 수는 음수일 수 없습니다: {n}")

        seen = {}
        for u, v, c in coloured_edges:
            if u == v:
                raise PreconditionError(f"루프 간선 ({u}, {v})")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise PreconditionError(f"정점 범위 초과: ({u}, {v}), n={n}")
            if (u, v) in seen:
                raise PreconditionError(f"중복 간선 ({u}, {v})")
            if c < 0:
                raise PreconditionError(f"색 번호는 음수일 수 없습니다: {c}")
            seen[(u, v)] = c

        ordered = sorted(seen.items())
        if relabel:
            mapping: Dict[int, int] = {}
            for _, c in ordered:
                mapping.setdefault(c, len(mapping))
            ordered = [(e, mapping[c]) for e, c in ordered]
        else:
            used = {c for _, c in ordered}
            if used != set(range(len(used))):
                raise PreconditionError(f"색 번호에 빈 곳이 있습니다: {sorted(used)}")

        return cls(n, tuple((u, v, c) for (u, v), c in ordered))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def p(self) -> int:
        return len({c for _, _, c in self.edges})

    @cached_property
    def adj(self) -> List[int]:
        return _adjacency_masks(self.n, ((u, v) for u, v, _ in self.edges))

    @cached_property
    def colour(self) -> Dict[Edge, int]:
        return {(u, v): c for u, v, c in self.edges}

    @cached_property
    def classes(self) -> List[List[Edge]]:
        result: List[List[Edge]] = [[] for _ in range(self.p)]
        for u, v, c in self.edges:
            result[c].append((u, v))
        return result

    @property
    def class_sizes(self) -> List[int]:
        return [len(cls_) for cls_ in self.classes]

    @property
    def max_class_size(self) -> int:
        return max(self.class_sizes, default=0)

    def colour_of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.colour[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    @cached_property
    def _canonical(self):
        mapping: Dict[int, int] = {}
        out = []
        for u, v, c in self.edges:
            mapping.setdefault(c, len(mapping))
            out.append((u, v, mapping[c]))
        return self.n, tuple(out)

    def __eq__(self, other):
        if not isinstance(other, ColouredGraph):
            return NotImplemented
        return self._canonical == other._canonical

    def __hash__(self):
        return hash(self._canonical)

    def __repr__(self):
        return f"ColouredGraph(n={self.n}, m={self.m}, p={self.p})"


@dataclass(frozen=True)
class SimpleGraph:
    """색 없는 단순 그래프 (간선은 정렬된 (u, v), u < v)"""

    n: int
    edges: Tuple[Edge, ...]

    @classmethod
    def build(cls, n: int, pairs: Iterable[Edge]) -> "SimpleGraph":
        normalised = set()
        for u, v in pairs:
            if u == v:
                raise PreconditionError(f"루프 간선 ({u}, {v})")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise PreconditionError(f"정점 범위 초과: ({u}, {v}), n={n}")
            normalised.add((u, v))
        return cls(n, tuple(sorted(normalised)))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        """정점 라벨이 0..n-1 인 networkx 그래프에서 생성"""
        return cls.build(graph.number_of_nodes(), graph.edges())

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> List[int]:
        return _adjacency_masks(self.n, self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class Digraph:
    """단순 방향 그래프 ((u,v) 와 (v,u) 동시 허용)"""

    n: int
    arcs: Tuple[Edge, ...]

    @classmethod
    def build(cls, n: int, arcs: Iterable[Edge]) -> "Digraph":
        seen = set()
        for u, v in arcs:
            if u == v:
                raise PreconditionError(f"루프 호 ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"정점 범위 초과: ({u}, {v}), n={n}")
            if (u, v) in seen:
                raise PreconditionError(f"중복 호 ({u}, {v})")
            seen.add((u, v))
        return cls(n, tuple(sorted(seen)))

    def out_degree(self, v: int) -> int:
        return sum(1 for u, _ in self.arcs if u == v)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.arcs)
        return graph


# ----------------------------------------------------------------------
# 기본 그래프 값
# ----------------------------------------------------------------------

def degree(g, v: int) -> int:
    """정점 v 의 차수"""
    if not 0 <= v < g.n:
        raise PreconditionError(f"정점 번호 {v} 가 범위(0..{g.n - 1})를 벗어났습니다")
    return bin(g.adj[v]).count("1")


def min_degree(g) -> int:
    """최소 차수 δ(G) (빈 그래프는 0)"""
    return min((degree(g, v) for v in range(g.n)), default=0)


def induced_counts(g, X: Iterable[int], Y: Iterable[int]) -> Tuple[int, int, int, int]:
    """(e(X), e(Y), e(X,Y), ē(X,Y))

    ē(X,Y) = |X|·|Y| − e(X,Y)
    """
    x_mask, y_mask = mask_of(X), mask_of(Y)
    if x_mask & y_mask:
        raise PreconditionError("X 와 Y 가 겹칩니다")
    if (x_mask | y_mask) >> g.n:
        raise PreconditionError("X 또는 Y 에 범위 밖 정점이 있습니다")

    e_x = sum(bin(g.adj[v] & x_mask).count("1") for v in iter_bits(x_mask)) // 2
    e_y = sum(bin(g.adj[v] & y_mask).count("1") for v in iter_bits(y_mask)) // 2
    e_xy = sum(bin(g.adj[v] & y_mask).count("1") for v in iter_bits(x_mask))
    size_x, size_y = bin(x_mask).count("1"), bin(y_mask).count("1")
    return e_x, e_y, e_xy, size_x * size_y - e_xy


def colour_classes(g: ColouredGraph) -> List[List[Edge]]:
    return [list(cls_) for cls_ in g.classes]


def underlying(g: ColouredGraph) -> SimpleGraph:
    return SimpleGraph(g.n, tuple((u, v) for u, v, _ in g.edges))


def to_networkx(g: ColouredGraph) -> nx.Graph:
    """색은 간선 속성 'colour' 로"""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from((u, v, {"colour": c}) for u, v, c in g.edges)
    return graph


def induced_subgraph(g: ColouredGraph, U: Iterable[int]) -> Tuple[ColouredGraph, List[int]]:
    """G[U] 와 라벨 목록 (새 정점 i 는 원래 정점 labels[i])"""
    labels = sorted(set(U))
    index = {v: i for i, v in enumerate(labels)}
    kept = [(index[u], index[v], c) for u, v, c in g.edges if u in index and v in index]
    return ColouredGraph.build(len(labels), kept), labels


def components(g, within: Iterable[int] = None) -> List[VertexSet]:
    """G[within] 의 연결요소 (최소 정점 순)"""
    remaining = mask_of(range(g.n)) if within is None else mask_of(within)
    return mask_components(g.adj, remaining)


def mask_components(adj: List[int], remaining: int) -> List[VertexSet]:
    """인접 비트마스크 목록 위에서 remaining 이 유도하는 연결요소"""
    found = []
    while remaining:
        start = remaining & -remaining
        comp, frontier = start, start
        while frontier:
            v = frontier.bit_length() - 1
            frontier ^= 1 << v
            new = adj[v] & remaining & ~comp
            comp |= new
            frontier |= new
        remaining &= ~comp
        found.append(frozenset(iter_bits(comp)))
    return found


def adjacency_matrix(g) -> np.ndarray:
    matrix = np.zeros((g.n, g.n), dtype=np.int64)
    for edge in g.edges:
        u, v = edge[0], edge[1]
        matrix[u, v] = matrix[v, u] = 1
    return matrix


# ----------------------------------------------------------------------
# 파일 교환 형식
# ----------------------------------------------------------------------

def _parse_ints(parts: List[str], line_no: int) -> List[int]:
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise GraphFormatError(f"정수가 아닌 값: {' '.join(parts)}", line_no) from None


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line.split()


def read_graph(text: str) -> ColouredGraph:
    """교환 형식 텍스트 → ColouredGraph"""
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise GraphFormatError("헤더 'n p' 가 없습니다") from None
    if len(header) != 2:
        raise GraphFormatError("헤더는 'n p' 형식이어야 합니다", header_no)
    n, p = _parse_ints(header, header_no)
    if n < 0 or p < 0:
        raise GraphFormatError("n, p 는 음수일 수 없습니다", header_no)

    seen = {}
    for line_no, parts in lines:
        if len(parts) != 3:
            raise GraphFormatError(f"간선 줄은 'u v c' 형식이어야 합니다: {' '.join(parts)}", line_no)
        u, v, c = _parse_ints(parts, line_no)
        if u == v:
            raise GraphFormatError(f"루프 간선 ({u}, {v})", line_no)
        if u > v:
            u, v = v, u
        if u < 0 or v >= n:
            raise GraphFormatError(f"정점 범위 초과: ({u}, {v}), n={n}", line_no)
        if not 0 <= c < p:
            raise GraphFormatError(f"색 번호 {c} 가 범위(0..{p - 1})를 벗어났습니다", line_no)
        if (u, v) in seen:
            raise GraphFormatError(f"중복 간선 ({u}, {v})", line_no)
        seen[(u, v)] = c

    missing = sorted(set(range(p)) - set(seen.values()))
    if missing:
        raise GraphFormatError(f"사용되지 않은 색 번호(공백): {missing}", header_no)

    return ColouredGraph.build(n, ((u, v, c) for (u, v), c in seen.items()), relabel=False)


def write_graph(g: ColouredGraph) -> str:
    lines = [f"{g.n} {g.p}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in g.edges)
    return "\n".join(lines) + "\n"


def graph_to_json(g: ColouredGraph) -> dict:
    return {"n": g.n, "p": g.p, "edges": [[u, v, c] for u, v, c in g.edges]}


def graph_from_json(obj: dict) -> ColouredGraph:
    try:
        n, p, edges = int(obj["n"]), int(obj["p"]), obj["edges"]
        triples = [(int(u), int(v), int(c)) for u, v, c in edges]
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(f"JSON 그래프 형식 오류: {e}") from None
    g = ColouredGraph.build(n, triples, relabel=False)
    if g.p != p:
        raise GraphFormatError(f"색 수 불일치: 헤더 p={p}, 실제 {g.p}")
    return g


def parse_graph(text: str) -> ColouredGraph:
    """텍스트 또는 JSON 자동 판별"""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphFormatError(f"JSON 파싱 실패: {e.msg}", e.lineno) from None
        return graph_from_json(obj)
    return read_graph(text)


def read_digraph(text: str) -> Digraph:
    """"n a" 헤더 + "u v" 호 줄"""
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise GraphFormatError("헤더 'n a' 가 없습니다") from None
    if len(header) != 2:
        raise GraphFormatError("헤더는 'n a' 형식이어야 합니다", header_no)
    n, _ = _parse_ints(header, header_no)

    arcs = []
    seen = set()
    for line_no, parts in lines:
        if len(parts) != 2:
            raise GraphFormatError(f"호 줄은 'u v' 형식이어야 합니다: {' '.join(parts)}", line_no)
        u, v = _parse_ints(parts, line_no)
        if u == v:
            raise GraphFormatError(f"루프 호 ({u}, {v})", line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"정점 범위 초과: ({u}, {v}), n={n}", line_no)
        if (u, v) in seen:
            raise GraphFormatError(f"중복 호 ({u}, {v})", line_no)
        seen.add((u, v))
        arcs.append((u, v))
    return Digraph.build(n, arcs)


def write_digraph(d: Digraph) -> str:
    lines = [f"{d.n} {len(d.arcs)}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


# 테스트 코드
if __name__ == "__main__":
    wheel = read_graph("5 4\n0 1 0\n0 4 0\n1 2 1\n1 4 1\n2 3 2\n2 4 2\n0 3 3\n3 4 3\n")
    print(f"✅ {wheel} 차수: {[degree(wheel, v) for v in range(wheel.n)]}")
    print(write_graph(wheel))
