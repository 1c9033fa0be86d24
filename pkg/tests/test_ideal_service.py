"""
IdealService 테스트
"""
import pytest

from conftest import vertex_of
from core.exceptions import NotHereditary, NotSaturated, TooLarge, UnknownVertex
from core.properties import settings
from models.models import Edge, Skeleton, SquareTable
from services.ideal_service import IdealService
from services.kgraph_service import KGraphService
from services.path_space_service import PathSpaceService


def discrete(n: int):
    return KGraphService.validate(Skeleton(2, tuple(f"p{i}" for i in range(n)), ()), SquareTable(()))


class TestClosures:

    def test_reachability(self, g2):
        below = IdealService.reachability_geq(g2)
        assert below["v"] == {"v", "w", "z"}
        assert below["w"] == {"w"}

    def test_hereditary_closure(self, g2):
        assert IdealService.hereditary_closure(g2, {"w"}) == {"w"}
        assert IdealService.hereditary_closure(g2, {"v"}) == {"v", "w", "z"}
        assert IdealService.hereditary_closure(g2, set()) == frozenset()

    def test_is_hereditary(self, g2):
        assert IdealService.is_hereditary(g2, {"w", "z"})
        assert not IdealService.is_hereditary(g2, {"v", "w"})

    def test_saturate_g4(self, g4):
        assert IdealService.saturate(g4, {vertex_of(1, 1)}) == set(g4.vertices)

    def test_saturate_need_not_be_hereditary(self, g2):
        saturated = IdealService.saturate(g2, {"w"})
        assert saturated == {"w", "v"}
        assert IdealService.is_saturated(g2, saturated)
        assert not IdealService.is_hereditary(g2, saturated)

    def test_tag(self, g2):
        tagged = IdealService.tag(g2, {"w"})
        assert tagged.hereditary and not tagged.saturated

    def test_unknown_vertex(self, g2):
        with pytest.raises(UnknownVertex):
            IdealService.saturate(g2, {"nowhere"})


class TestLattice:

    def test_g4_is_simple(self, g4):
        lattice = IdealService.enumerate_sat_hered(g4)
        assert [element.sorted_members() for element in lattice.elements] == [[], sorted(g4.vertices)]

    def test_discrete_graph_has_every_subset(self):
        lattice = IdealService.enumerate_sat_hered(discrete(4))
        assert len(lattice) == 16

    def test_meet_join_covers(self):
        lattice = IdealService.enumerate_sat_hered(discrete(2))
        bottom, left, right, top = lattice.elements
        assert lattice.meet(left, right) == bottom
        assert lattice.join(left, right) == top
        assert len(lattice.covers()) == 4
        assert (bottom, top) not in lattice.covers()

    def test_g3_has_only_the_trivial_sets(self, g3):
        lattice = IdealService.enumerate_sat_hered(g3)
        assert [len(element.members) for element in lattice.elements] == [0, 2]

    def test_guard(self, g1, monkeypatch):
        monkeypatch.setattr(settings, "MAX_LATTICE_VERTICES", 4)
        with pytest.raises(TooLarge):
            IdealService.enumerate_sat_hered(g1)

    def test_join_outside_the_lattice(self):
        # v 는 colour 1 로만 포화되고 colour 2 입력 z 는 남는다
        g = KGraphService.validate(
            Skeleton(2, ("v", "w1", "w2", "z"), (
                Edge("e1", 1, "w1", "v"), Edge("e2", 1, "w2", "v"), Edge("f", 2, "z", "v"),
            )),
            SquareTable(()),
        )
        lattice = IdealService.enumerate_sat_hered(g)
        by_members = {element.members: element for element in lattice.elements}
        left, right = by_members[frozenset({"w1"})], by_members[frozenset({"w2"})]

        with pytest.raises(NotHereditary) as error:
            lattice.join(left, right)
        assert error.value.detail["members"] == ["v", "w1", "w2"]


class TestQuotient:

    def test_empty_set_keeps_the_graph(self, g1):
        assert IdealService.quotient_graph(g1, set()) == g1

    def test_everything_leaves_the_empty_graph(self, g4):
        quotient = IdealService.quotient_graph(g4, g4.vertices)
        assert quotient.vertices == ()
        assert quotient.skeleton.edges == ()

    def test_discrete_quotient(self):
        quotient = IdealService.quotient_graph(discrete(3), {"p0"})
        assert quotient.vertices == ("p1", "p2")

    def test_not_saturated(self, g4):
        with pytest.raises(NotSaturated):
            IdealService.quotient_graph(g4, {vertex_of(1, 1)})

    def test_not_hereditary(self, g4):
        with pytest.raises(NotHereditary):
            IdealService.quotient_graph(g4, {vertex_of(0, 0)})

    def test_quotients_are_locally_convex(self, g1):
        for element in IdealService.enumerate_sat_hered(g1).elements:
            quotient = IdealService.quotient_graph(g1, element.members)
            assert quotient.validated
            assert PathSpaceService.is_locally_convex(quotient)[0]


class TestRestriction:

    def test_everything_keeps_the_graph(self, g1):
        assert IdealService.restriction_graph(g1, g1.vertices) == g1

    def test_corner_row(self, g1):
        row = {vertex_of(a, 2) for a in range(4)}
        restricted = IdealService.restriction_graph(g1, row)
        assert len(restricted.vertices) == 4
        assert len(restricted.skeleton.edges) == 3
        assert len(restricted.squares) == 0
        assert PathSpaceService.is_locally_convex(restricted)[0]

    def test_not_hereditary(self, g1):
        with pytest.raises(NotHereditary):
            IdealService.restriction_graph(g1, {vertex_of(0, 0)})
