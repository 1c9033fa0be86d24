"""
BoundaryService 테스트
"""
import pytest

from conftest import deg, load_fixture, vertex_of
from core.exceptions import DegreeMismatch, InfiniteBoundary, UnknownVertex
from dto.reports import ConditionBStatus
from models.models import Edge, Skeleton, SquareTable
from services.boundary_service import BoundaryService
from services.kgraph_service import KGraphService
from services.path_service import PathService


def assert_boundary_condition(g, x):
    """complete 경계 경로는 모든 면에서 해당 색 입력이 없어야 한다"""
    d = x.prefix.degree
    for p, vertex in PathService.grid_vertices(g, x.prefix).items():
        for colour in range(1, g.k + 1):
            if p[colour - 1] == d[colour - 1]:
                assert not g.incoming(vertex, colour)


class TestBoundaryPaths:

    def test_g1_corner_path(self, g1):
        found = BoundaryService.boundary_paths(g1, vertex_of(0, 0), deg(3, 2))
        assert len(found) == 1
        assert found[0].complete
        assert found[0].prefix.source_vertex == vertex_of(3, 2)

    def test_g2_has_none(self, g2):
        assert BoundaryService.boundary_paths(g2, "v", deg(1, 1)) == []

    def test_vertex_receiving_nothing(self, g2):
        found = BoundaryService.boundary_paths(g2, "w", deg(1, 1))
        assert [x.prefix for x in found] == [PathService.vertex_path(g2, "w")]
        assert found[0].complete

    def test_loop_is_truncated(self, g5):
        found = BoundaryService.boundary_paths(g5, "v", deg(4))
        assert len(found) == 1
        assert found[0].prefix.degree == deg(4)
        assert not found[0].complete

    @pytest.mark.parametrize("name", ["g1", "g4"])
    def test_complete_paths_pass_the_boundary_condition(self, name):
        g = load_fixture(name)
        found = BoundaryService.complete_boundary_paths(g)
        assert len(found) == len(g.vertices)
        for x in found:
            assert_boundary_condition(g, x)

    def test_infinite_boundary(self, g5):
        with pytest.raises(InfiniteBoundary):
            BoundaryService.complete_boundary_paths(g5)

    @pytest.mark.parametrize("name, cap", [("g1", (2, 2)), ("g3", (2, 2)), ("g4", (2, 2)), ("g5", (3,))])
    def test_never_empty_on_locally_convex_graphs(self, name, cap):
        g = load_fixture(name)
        for vertex in g.vertices:
            for m in deg(*cap).grid():
                assert BoundaryService.boundary_paths(g, vertex, m)


class TestConditionB:

    @pytest.mark.parametrize("name", ["g1", "g4"])
    def test_finite_acyclic_graphs_are_proven(self, name):
        g = load_fixture(name)
        for vertex in g.vertices:
            verdict = BoundaryService.condition_b_check(g, vertex, deg(2, 2))
            assert verdict.status == ConditionBStatus.PROVEN
            assert verdict.witness.complete

    def test_single_loop_is_refuted(self, g5):
        verdict = BoundaryService.condition_b_check(g5, "v", deg(4))
        assert verdict.status == ConditionBStatus.REFUTED_TO_DEPTH
        assert verdict.failing_pair is not None

    def test_g3_is_periodic(self, g3):
        # 각 vertex 에 경로가 degree 마다 하나뿐이라 hx = x
        verdict = BoundaryService.condition_b_check(g3, "v", deg(2, 2))
        assert verdict.status == ConditionBStatus.REFUTED_TO_DEPTH

    def test_two_loops_separate(self):
        g = KGraphService.validate(
            Skeleton(1, ("v",), (Edge("a", 1, "v", "v"), Edge("b", 1, "v", "v"))),
            SquareTable(()),
        )
        verdict = BoundaryService.condition_b_check(g, "v", deg(3))
        assert verdict.status == ConditionBStatus.WITNESS_TO_DEPTH

    def test_g2_has_no_boundary_path(self, g2):
        verdict = BoundaryService.condition_b_check(g2, "v", deg(1, 1))
        assert verdict.status == ConditionBStatus.REFUTED_TO_DEPTH

    @pytest.mark.parametrize("name, depth", [("g1", (1,)), ("g4", (1, 1, 1)), ("g5", (1, 1))])
    def test_depth_must_match_k(self, name, depth):
        g = load_fixture(name)
        with pytest.raises(DegreeMismatch):
            BoundaryService.condition_b_check(g, g.vertices[0], deg(*depth))

    def test_unknown_vertex(self, g1):
        with pytest.raises(UnknownVertex):
            BoundaryService.condition_b_check(g1, "nowhere", deg(1, 1))
