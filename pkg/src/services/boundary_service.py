"""
Boundary Service
경계 경로 열거 및 condition (B) 판정
"""
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx

from core.exceptions import InfiniteBoundary
from core.logging_config import get_logger
from dto.reports import BoundaryPathView, ConditionBStatus, ConditionBVerdict
from models.models import BoundaryPath, Degree, KGraph, Path
from services.kgraph_service import KGraphService
from services.path_service import PathService
from services.path_space_service import PathSpaceService

logger = get_logger(__name__)


class BoundaryService:
    """경계 경로 서비스"""

    @staticmethod
    def classify(g: KGraph, path: Path, cap: Degree) -> Optional[BoundaryPath]:
        """
        prefix λ가 경계 경로의 유한 관측인지 판정

        colour i 면 {p ≤ d(λ) : p_i = d(λ)_i} 의 모든 x(p)에 colour i 입력 간선이 없으면
        소진(exhausted). 소진되지 않은 방향은 d(λ)_i = cap_i (잘림)일 때만 허용.

        Returns:
            BoundaryPath 또는 None
        """
        degree = path.degree
        grid = PathService.grid_vertices(g, path)
        exhausted = []
        for colour in range(1, g.k + 1):
            face = (vertex for point, vertex in grid.items() if point[colour - 1] == degree[colour - 1])
            done = all(not g.incoming(vertex, colour) for vertex in face)
            if not done and degree[colour - 1] < cap[colour - 1]:
                return None
            exhausted.append(done)
        return BoundaryPath(path, tuple(exhausted), cap)

    @staticmethod
    def boundary_paths(g: KGraph, vertex: str, cap: Degree) -> List[BoundaryPath]:
        """
        r(x) = v 이고 d(prefix) ≤ cap 인 경계 경로 (정렬됨)

        소진되지 않은 좌표가 있으면 complete=False 로 표시된다.
        """
        found = []
        for path in PathSpaceService.paths_upto(g, vertex, cap):
            boundary_path = BoundaryService.classify(g, path, cap)
            if boundary_path is not None:
                found.append(boundary_path)
        return sorted(found, key=BoundaryPath.sort_key)

    @staticmethod
    def complete_boundary_paths(g: KGraph) -> List[BoundaryPath]:
        """
        모든 경계 경로 (유한 그래프, 방향 사이클 없음)

        Raises:
            InfiniteBoundary: 스켈레톤에 방향 사이클 존재
        """
        cap = KGraphService.max_degree(g)
        if cap is None:
            raise InfiniteBoundary("the skeleton has a directed cycle, so boundary paths are infinite")

        found = [
            boundary_path
            for vertex in g.vertices
            for boundary_path in BoundaryService.boundary_paths(g, vertex, cap)
            if boundary_path.complete
        ]
        return sorted(found, key=lambda x: (x.range_vertex, x.sort_key()))

    @staticmethod
    def _future(g: KGraph, vertex: str) -> List[str]:
        """v ≥ w 인 모든 w (v 포함)"""
        digraph = KGraphService.skeleton_digraph(g)
        return sorted(nx.descendants(digraph, vertex) | {vertex})

    @staticmethod
    def condition_b_check(g: KGraph, vertex: str, depth: Degree) -> ConditionBVerdict:
        """
        condition (B) 판정

        v에서 도달 가능한 부분이 비순환이면 완전한 경계 경로 존재 여부로 PROVEN.
        그렇지 않으면 x 를 2·depth 까지 관측한 후보 중, s(α) = s(β) = v, d(α), d(β) ≤ depth,
        α ≠ β 인 모든 쌍에 대해 αx 와 βx 가 공통 관측 degree d(αx) ∧ d(βx) 에서 다른 것을 찾는다.

        Args:
            g: k-graph
            vertex: 판정할 vertex
            depth: 탐색 깊이

        Returns:
            ConditionBVerdict
        """
        PathSpaceService._check_vertex_and_degree(g, vertex, depth)

        cap = KGraphService.max_degree(g, BoundaryService._future(g, vertex))
        if cap is not None:
            candidates = [x for x in BoundaryService.boundary_paths(g, vertex, cap) if x.complete]
            if candidates:
                return ConditionBVerdict(
                    vertex=vertex,
                    status=ConditionBStatus.PROVEN,
                    depth=list(depth.entries),
                    witness=BoundaryPathView.of(candidates[0]),
                    detail="finite acyclic future; every boundary path is aperiodic",
                )
            return ConditionBVerdict(
                vertex=vertex,
                status=ConditionBStatus.REFUTED_TO_DEPTH,
                depth=list(depth.entries),
                detail="no boundary path has range at this vertex",
            )

        # x 는 2·depth 까지 관측하고, 각 쌍은 관측된 공통 prefix 에서 비교한다
        candidates = BoundaryService.boundary_paths(g, vertex, depth + depth)
        arriving = PathSpaceService.paths_with_source(g, vertex, depth)

        failing_pair = None
        for x in candidates:
            extended = [PathService.compose(g, alpha, x.prefix) for alpha in arriving]
            clash = BoundaryService._first_clash(g, arriving, extended)
            if clash is None:
                logger.debug(f"condition (B) at {vertex}: witness {x.prefix}")
                return ConditionBVerdict(
                    vertex=vertex,
                    status=ConditionBStatus.WITNESS_TO_DEPTH,
                    depth=list(depth.entries),
                    witness=BoundaryPathView.of(x),
                )
            if failing_pair is None:
                failing_pair = [list(clash[0].edges) or [vertex], list(clash[1].edges) or [vertex]]

        return ConditionBVerdict(
            vertex=vertex,
            status=ConditionBStatus.REFUTED_TO_DEPTH,
            depth=list(depth.entries),
            failing_pair=failing_pair,
            detail=f"{len(candidates)} candidate boundary paths, none separates paths into {vertex}",
        )

    @staticmethod
    def _first_clash(g: KGraph, arriving: List[Path], extended: List[Path]) -> Optional[Tuple[Path, Path]]:
        """αx̂, βx̂ 가 공통 관측 degree 에서 같아지는 첫 (α, β)"""
        for (alpha, alpha_x), (beta, beta_x) in combinations(zip(arriving, extended), 2):
            if alpha_x.range_vertex != beta_x.range_vertex:
                continue
            cut = alpha_x.degree.meet(beta_x.degree)
            if PathService.initial_segment(g, alpha_x, cut) == PathService.initial_segment(g, beta_x, cut):
                return alpha, beta
        return None
