"""
KGraph Service
스켈레톤/square table 검증, k-graph 생성 (Ω_{k,m}, 방향 그래프), square table 열거
"""
from collections import defaultdict
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Dict, List, Optional, Tuple

import networkx as nx

from core.exceptions import (
    ColourOutOfRange,
    CubeViolation,
    DuplicateId,
    DuplicateSquare,
    EndpointMismatch,
    InvalidDegree,
    InvalidSkeleton,
    MissingSquare,
    TooLarge,
    UnknownEdgeId,
    UnknownVertex,
)
from core.logging_config import get_logger
from core.properties import settings
from dto.reports import CubeViolationReport
from models.models import Degree, Edge, EdgePair, KGraph, Skeleton, Square, SquareTable

logger = get_logger(__name__)


class KGraphService:
    """k-graph 구성 및 검증 서비스"""

    # ============================================================
    # 검증
    # ============================================================

    @staticmethod
    def check_skeleton(skeleton: Skeleton) -> None:
        """
        스켈레톤 기본 검증

        Raises:
            InvalidSkeleton: k < 1
            DuplicateId: 중복 vertex/edge id
            ColourOutOfRange: colour ∉ 1..k
            UnknownVertex: 존재하지 않는 endpoint
        """
        if skeleton.k < 1:
            raise InvalidSkeleton(f"k must be at least 1, got {skeleton.k}")

        if len(set(skeleton.vertices)) != len(skeleton.vertices):
            duplicate = next(v for v in skeleton.vertices if skeleton.vertices.count(v) > 1)
            raise DuplicateId(f"duplicate vertex id {duplicate!r}")

        seen = set()
        vertices = set(skeleton.vertices)
        for edge in skeleton.edges:
            if edge.id in seen:
                raise DuplicateId(f"duplicate edge id {edge.id!r}")
            if edge.id in vertices:
                raise DuplicateId(f"edge id {edge.id!r} is also a vertex id")
            seen.add(edge.id)
            if not 1 <= edge.colour <= skeleton.k:
                raise ColourOutOfRange(f"edge {edge.id!r} has colour {edge.colour}, expected 1..{skeleton.k}")
            for endpoint in (edge.source, edge.range):
                if endpoint not in vertices:
                    raise UnknownVertex(f"edge {edge.id!r} refers to unknown vertex {endpoint!r}")

    @staticmethod
    def bicoloured_pairs(skeleton: Skeleton) -> List[EdgePair]:
        """합성 가능한 모든 (outer, inner) 쌍 중 색이 다른 것 (s(outer) = r(inner))"""
        by_range: Dict[str, List[Edge]] = defaultdict(list)
        for edge in skeleton.edges:
            by_range[edge.range].append(edge)

        pairs = []
        for outer in skeleton.edges:
            for inner in by_range[outer.source]:
                if inner.colour != outer.colour:
                    pairs.append((outer.id, inner.id))
        return sorted(pairs)

    @staticmethod
    def check_square_table(skeleton: Skeleton, squares: SquareTable) -> None:
        """
        모든 bi-coloured 쌍이 정확히 한 square, 한 slot에 나타나는지 검사

        Raises:
            UnknownEdgeId, EndpointMismatch, DuplicateSquare, MissingSquare
        """
        occupied: Dict[EdgePair, Square] = {}

        for square in squares:
            for edge_id in square.as_list():
                if not skeleton.has_edge(edge_id):
                    raise UnknownEdgeId(f"square {square.as_list()} refers to unknown edge {edge_id!r}")

            outer_lo, inner_lo, outer_hi, inner_hi = (skeleton.edge(e) for e in square.as_list())
            i, j = outer_lo.colour, inner_lo.colour
            if not (i < j and inner_hi.colour == i and outer_hi.colour == j):
                raise EndpointMismatch(
                    f"square {square.as_list()} must read (colour i, colour j, colour j, colour i) with i < j"
                )
            if outer_lo.source != inner_lo.range or outer_hi.source != inner_hi.range:
                raise EndpointMismatch(f"square {square.as_list()} contains a non-composable pair")
            if outer_lo.range != outer_hi.range or inner_lo.source != inner_hi.source:
                raise EndpointMismatch(f"square {square.as_list()} factorisations have different endpoints")

            for pair in (square.lo_pair, square.hi_pair):
                if pair in occupied:
                    raise DuplicateSquare(
                        f"pair {list(pair)} appears in {occupied[pair].as_list()} and {square.as_list()}"
                    )
                occupied[pair] = square

        for pair in KGraphService.bicoloured_pairs(skeleton):
            if pair not in occupied:
                raise MissingSquare(f"bi-coloured pair {list(pair)} is in no square", detail={"pair": list(pair)})

    @staticmethod
    def check_cube_condition(skeleton: Skeleton, squares: SquareTable) -> List[CubeViolationReport]:
        """
        세 가지 색 i < j < l 의 합성 가능한 (x, y, z)에 대해 두 가지 재작성 순서 비교

        swap(1,2) → swap(0,1) → swap(1,2) 와 swap(0,1) → swap(1,2) → swap(0,1)

        Returns:
            List[CubeViolationReport]: 결과가 다른 triple 목록
        """
        if skeleton.k < 3:
            return []

        swap: Dict[EdgePair, EdgePair] = {}
        for square in squares:
            swap[square.lo_pair] = square.hi_pair
            swap[square.hi_pair] = square.lo_pair

        by_range: Dict[str, List[Edge]] = defaultdict(list)
        for edge in skeleton.edges:
            by_range[edge.range].append(edge)

        def rewrite(word: List[str], order: Tuple[int, ...]) -> Optional[List[str]]:
            letters = list(word)
            for position in order:
                pair = swap.get((letters[position], letters[position + 1]))
                if pair is None:
                    return None
                letters[position], letters[position + 1] = pair
            return letters

        violations = []
        for x in skeleton.edges:
            for y in by_range[x.source]:
                if y.colour <= x.colour:
                    continue
                for z in by_range[y.source]:
                    if z.colour <= y.colour:
                        continue
                    triple = [x.id, y.id, z.id]
                    visible = rewrite(triple, (1, 0, 1))
                    hidden = rewrite(triple, (0, 1, 0))
                    if visible != hidden:
                        violations.append(
                            CubeViolationReport(triple=triple, via_visible=visible or [], via_hidden=hidden or [])
                        )
        return sorted(violations, key=lambda violation: violation.triple)

    @staticmethod
    def validate(skeleton: Skeleton, squares: SquareTable) -> KGraph:
        """
        스켈레톤과 square table을 검증하여 KGraph 생성

        Args:
            skeleton: 색칠된 방향 그래프
            squares: square table

        Returns:
            KGraph: validated=True

        Raises:
            SquareTableError 계열 및 입력 오류
        """
        KGraphService.check_skeleton(skeleton)
        KGraphService.check_square_table(skeleton, squares)

        violations = KGraphService.check_cube_condition(skeleton, squares)
        if violations:
            first = violations[0]
            raise CubeViolation(
                f"cube condition fails on triple {first.triple}: {first.via_visible} != {first.via_hidden}",
                detail={"triples": [violation.triple for violation in violations]},
            )

        logger.debug(
            f"validated {skeleton.k}-graph: {len(skeleton.vertices)} vertices, "
            f"{len(skeleton.edges)} edges, {len(squares)} squares"
        )
        return KGraph(skeleton, squares, validated=True)

    # ============================================================
    # square table 열거
    # ============================================================

    @staticmethod
    def enumerate_square_sets(skeleton: Skeleton) -> List[SquareTable]:
        """
        스켈레톤에 대해 가능한 모든 square table 열거

        (i, j, r, s) 클래스마다 lo 쌍과 hi 쌍의 전단사를 고르고, k ≥ 3이면
        큐브 조건을 만족하는 것만 남긴다.

        Returns:
            List[SquareTable]: 결정적 순서; 스켈레톤이 k-graph가 될 수 없으면 []

        Raises:
            TooLarge: 후보 수가 MAX_SQUARE_SETS 초과
        """
        KGraphService.check_skeleton(skeleton)

        classes: Dict[Tuple[int, int, str, str], Tuple[List[EdgePair], List[EdgePair]]] = defaultdict(lambda: ([], []))
        for outer_id, inner_id in KGraphService.bicoloured_pairs(skeleton):
            outer, inner = skeleton.edge(outer_id), skeleton.edge(inner_id)
            if outer.colour < inner.colour:
                key = (outer.colour, inner.colour, outer.range, inner.source)
                classes[key][0].append((outer_id, inner_id))
            else:
                key = (inner.colour, outer.colour, outer.range, inner.source)
                classes[key][1].append((outer_id, inner_id))

        keys = sorted(classes)
        for key in keys:
            lo, hi = classes[key]
            if len(lo) != len(hi):
                logger.debug(f"class {key} has {len(lo)} lo pairs and {len(hi)} hi pairs; no square table")
                return []

        candidates = prod(factorial(len(classes[key][0])) for key in keys)
        if candidates > settings.MAX_SQUARE_SETS:
            raise TooLarge(f"{candidates} candidate square tables exceed the limit {settings.MAX_SQUARE_SETS}")

        choices = []
        for key in keys:
            lo, hi = (sorted(pairs) for pairs in classes[key])
            choices.append([
                [Square(lo_pair[0], lo_pair[1], hi_pair[0], hi_pair[1]) for lo_pair, hi_pair in zip(lo, matching)]
                for matching in permutations(hi)
            ])

        tables = []
        for selection in product(*choices):
            table = SquareTable(tuple(square for squares in selection for square in squares))
            if skeleton.k >= 3 and KGraphService.check_cube_condition(skeleton, table):
                continue
            tables.append(table)

        logger.info(f"{len(tables)} square tables out of {candidates} candidates")
        return tables

    # ============================================================
    # 생성
    # ============================================================

    @staticmethod
    def omega_vertex(point: Tuple[int, ...]) -> str:
        return "v" + "_".join(str(n) for n in point)

    @staticmethod
    def omega_edge(colour: int, point: Tuple[int, ...]) -> str:
        """range가 point인 colour 간선 id"""
        return f"c{colour}_{KGraphService.omega_vertex(point)}"

    @staticmethod
    def build_omega(k: int, m: Degree) -> KGraph:
        """
        Ω_{k,m} 생성: vertex는 p ≤ m, colour i 간선은 p+e_i → p

        Raises:
            InvalidDegree: len(m) != k
            TooLarge: 격자점 수가 MAX_GRID_POINTS 초과
        """
        if k < 1 or m.k != k:
            raise InvalidDegree(f"degree {m} does not have {k} entries")

        points = prod(n + 1 for n in m)
        if points > settings.MAX_GRID_POINTS:
            raise TooLarge(f"Ω_{{{k},{m}}} has {points} vertices, limit {settings.MAX_GRID_POINTS}")

        grid = [p.entries for p in m.grid()]
        vertices = tuple(KGraphService.omega_vertex(p) for p in grid)

        def shifted(p: Tuple[int, ...], colour: int) -> Tuple[int, ...]:
            return tuple(n + 1 if i == colour - 1 else n for i, n in enumerate(p))

        edges = []
        squares = []
        for p in grid:
            for colour in range(1, k + 1):
                q = shifted(p, colour)
                if q[colour - 1] <= m[colour - 1]:
                    edges.append(Edge(
                        KGraphService.omega_edge(colour, p),
                        colour,
                        KGraphService.omega_vertex(q),
                        KGraphService.omega_vertex(p),
                    ))
            for i, j in combinations(range(1, k + 1), 2):
                corner = shifted(shifted(p, i), j)
                if all(a <= b for a, b in zip(corner, m)):
                    squares.append(Square(
                        KGraphService.omega_edge(i, p),
                        KGraphService.omega_edge(j, shifted(p, i)),
                        KGraphService.omega_edge(j, p),
                        KGraphService.omega_edge(i, shifted(p, j)),
                    ))

        return KGraphService.validate(Skeleton(k, vertices, tuple(edges)), SquareTable(tuple(squares)))

    @staticmethod
    def build_from_directed_graph(graph: nx.MultiDiGraph) -> KGraph:
        """
        방향 그래프 → 1-graph

        networkx 간선 u → v는 source u, range v 인 colour 1 간선.
        간선 id는 data["id"], 없으면 key.
        """
        vertices = tuple(str(node) for node in graph.nodes)
        edges = tuple(
            Edge(str(data.get("id", key)), 1, str(u), str(v))
            for u, v, key, data in graph.edges(keys=True, data=True)
        )
        return KGraphService.validate(Skeleton(1, vertices, edges), SquareTable(()))

    @staticmethod
    def skeleton_digraph(g: KGraph, colour: Optional[int] = None) -> nx.MultiDiGraph:
        """range → source 방향 스켈레톤 그래프 (colour 지정 시 해당 색만)"""
        digraph = nx.MultiDiGraph()
        digraph.add_nodes_from(g.vertices)
        for edge in g.skeleton.edges:
            if colour is None or edge.colour == colour:
                digraph.add_edge(edge.range, edge.source, key=edge.id)
        return digraph

    @staticmethod
    def max_degree(g: KGraph, vertices: Optional[List[str]] = None) -> Optional[Degree]:
        """
        경로 degree의 좌표별 상한 (색별 최장 사슬 길이)

        Args:
            vertices: 지정 시 해당 vertex 집합이 유도하는 부분그래프만 고려

        Returns:
            Degree 또는 None (방향 사이클 존재)
        """
        whole = KGraphService.skeleton_digraph(g)
        if vertices is not None:
            whole = whole.subgraph(vertices)
        if not nx.is_directed_acyclic_graph(whole):
            return None

        entries = []
        for colour in range(1, g.k + 1):
            coloured = KGraphService.skeleton_digraph(g, colour)
            if vertices is not None:
                coloured = coloured.subgraph(vertices)
            entries.append(nx.dag_longest_path_length(coloured) if coloured.number_of_edges() else 0)
        return Degree(tuple(entries))
