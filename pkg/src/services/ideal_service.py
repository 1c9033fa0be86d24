"""
Ideal Service
saturated hereditary vertex set, 격자 열거, quotient/restriction 그래프
"""
from typing import Dict, FrozenSet, Iterable, List

import networkx as nx

from core.exceptions import NotHereditary, NotLocallyConvex, NotSaturated, TooLarge, UnknownVertex
from core.logging_config import get_logger
from core.properties import settings
from models.lattice import VertexLattice, VertexSet
from models.models import KGraph, Skeleton, SquareTable
from services.kgraph_service import KGraphService
from services.path_space_service import PathSpaceService

logger = get_logger(__name__)


class IdealService:
    """vertex 집합 연산 서비스"""

    @staticmethod
    def _check_members(g: KGraph, members: Iterable[str]) -> FrozenSet[str]:
        members = frozenset(members)
        unknown = members - set(g.vertices)
        if unknown:
            raise UnknownVertex(f"unknown vertices {sorted(unknown)}")
        return members

    @staticmethod
    def reachability_geq(g: KGraph) -> Dict[str, FrozenSet[str]]:
        """v → {w : v ≥ w} (v에서 source 방향으로 도달 가능, v 포함)"""
        digraph = KGraphService.skeleton_digraph(g)
        return {vertex: frozenset(nx.descendants(digraph, vertex) | {vertex}) for vertex in g.vertices}

    @staticmethod
    def hereditary_closure(g: KGraph, members: Iterable[str]) -> FrozenSet[str]:
        members = IdealService._check_members(g, members)
        below = IdealService.reachability_geq(g)
        return frozenset().union(*(below[vertex] for vertex in members)) if members else frozenset()

    @staticmethod
    def is_hereditary(g: KGraph, members: Iterable[str]) -> bool:
        members = IdealService._check_members(g, members)
        return all(edge.source in members for edge in g.skeleton.edges if edge.range in members)

    @staticmethod
    def sigma(g: KGraph, members: Iterable[str]) -> FrozenSet[str]:
        """
        Σ(F) = ∪_i {v : s(Λ^≤e_i(v)) ⊆ F}

        colour i 입력이 없는 v는 Λ^≤e_i(v) = {v} 이므로 v ∈ F 일 때만 포함된다.
        """
        members = IdealService._check_members(g, members)
        found = set()
        for vertex in g.vertices:
            for colour in range(1, g.k + 1):
                edges = g.incoming(vertex, colour)
                sources = {edge.source for edge in edges} if edges else {vertex}
                if sources <= members:
                    found.add(vertex)
                    break
        return frozenset(found)

    @staticmethod
    def saturate(g: KGraph, members: Iterable[str]) -> FrozenSet[str]:
        """F ← F ∪ Σ(F) 를 fixpoint 까지 반복"""
        current = IdealService._check_members(g, members)
        while True:
            extended = current | IdealService.sigma(g, current)
            if extended == current:
                return current
            current = extended

    @staticmethod
    def is_saturated(g: KGraph, members: Iterable[str]) -> bool:
        members = IdealService._check_members(g, members)
        return IdealService.sigma(g, members) <= members

    @staticmethod
    def tag(g: KGraph, members: Iterable[str]) -> VertexSet:
        members = IdealService._check_members(g, members)
        return VertexSet(
            members=members,
            hereditary=IdealService.is_hereditary(g, members),
            saturated=IdealService.is_saturated(g, members),
        )

    @staticmethod
    def enumerate_sat_hered(g: KGraph) -> VertexLattice:
        """
        saturated hereditary 집합 전체 (bitmask 전수 조사)

        Raises:
            TooLarge: vertex 수가 MAX_LATTICE_VERTICES 초과
        """
        vertices = g.vertices
        if len(vertices) > settings.MAX_LATTICE_VERTICES:
            raise TooLarge(f"{len(vertices)} vertices exceed the lattice limit {settings.MAX_LATTICE_VERTICES}")

        elements = []
        for mask in range(1 << len(vertices)):
            members = frozenset(vertex for i, vertex in enumerate(vertices) if mask >> i & 1)
            if IdealService.is_hereditary(g, members) and IdealService.is_saturated(g, members):
                elements.append(VertexSet(members, True, True))

        elements.sort(key=lambda element: (len(element.members), element.sorted_members()))
        logger.info(f"{len(elements)} saturated hereditary sets on {len(vertices)} vertices")
        return VertexLattice(
            tuple(elements),
            lambda members: IdealService.saturate(g, IdealService.hereditary_closure(g, members)),
        )

    @staticmethod
    def quotient_graph(g: KGraph, members: Iterable[str]) -> KGraph:
        """
        Λ \\ Λ H: source가 H 밖인 간선, 네 간선이 모두 남는 square 만 유지

        Raises:
            NotHereditary, NotSaturated, NotLocallyConvex
        """
        members = IdealService._check_members(g, members)
        if not IdealService.is_hereditary(g, members):
            raise NotHereditary(f"{sorted(members)} is not hereditary")
        if not IdealService.is_saturated(g, members):
            raise NotSaturated(f"{sorted(members)} is not saturated")
        convex, witnesses = PathSpaceService.is_locally_convex(g)
        if not convex:
            raise NotLocallyConvex(f"not locally convex at {witnesses[0].vertex}")

        edges = tuple(edge for edge in g.skeleton.edges if edge.source not in members)
        kept = {edge.id for edge in edges}
        squares = tuple(square for square in g.squares if kept.issuperset(square.as_list()))
        vertices = tuple(vertex for vertex in g.vertices if vertex not in members)
        return KGraphService.validate(Skeleton(g.k, vertices, edges), SquareTable(squares))

    @staticmethod
    def restriction_graph(g: KGraph, members: Iterable[str]) -> KGraph:
        """
        Λ H: range가 H 안인 간선 (hereditary 이므로 source도 H 안)

        Raises:
            NotHereditary
        """
        members = IdealService._check_members(g, members)
        if not IdealService.is_hereditary(g, members):
            raise NotHereditary(f"{sorted(members)} is not hereditary")

        edges = tuple(edge for edge in g.skeleton.edges if edge.range in members)
        kept = {edge.id for edge in edges}
        squares = tuple(square for square in g.squares if kept.issuperset(square.as_list()))
        return KGraphService.validate(Skeleton(g.k, tuple(sorted(members)), edges), SquareTable(squares))
