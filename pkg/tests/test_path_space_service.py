"""
PathSpaceService 테스트
"""
import pytest

from conftest import deg, edge_path, load_fixture, vertex_of
from core.exceptions import PreconditionViolated
from services.path_service import PathService
from services.path_space_service import PathSpaceService


class TestPathsOfDegree:

    def test_g1_full_grid(self, g1):
        assert len(PathSpaceService.paths_of_degree(g1, vertex_of(0, 0), deg(3, 2))) == 1

    def test_degree_zero(self, g3):
        assert PathSpaceService.paths_of_degree(g3, "u", deg(0, 0)) == [PathService.vertex_path(g3, "u")]

    @pytest.mark.parametrize("n", range(11))
    def test_loop_has_one_path_per_length(self, g5, n):
        assert len(PathSpaceService.paths_of_degree(g5, "v", deg(n))) == 1

    def test_omega_has_at_most_one_path(self, g1):
        for vertex in g1.vertices:
            for m in deg(3, 2).grid():
                assert len(PathSpaceService.paths_of_degree(g1, vertex, m)) <= 1

    def test_g3_degree_three_one(self, g3):
        found = PathSpaceService.paths_of_degree(g3, "u", deg(3, 1))
        assert edge_path(g3, "g", "e", "g", "h") in found


class TestLePaths:

    def test_g2_unit_square(self, g2):
        assert PathSpaceService.le_paths(g2, "v", deg(1, 1)) == [edge_path(g2, "f"), edge_path(g2, "e")]

    def test_vertex_receiving_nothing(self, g2):
        for q in deg(2, 2).grid():
            assert PathSpaceService.le_paths(g2, "w", q) == [PathService.vertex_path(g2, "w")]

    def test_g4_single_grid_path(self, g4):
        found = PathSpaceService.le_paths(g4, vertex_of(0, 0), deg(1, 1))
        assert len(found) == 1
        assert found[0].degree == deg(1, 1)

    def test_never_empty(self, g3):
        for q in deg(2, 2).grid():
            for vertex in g3.vertices:
                assert PathSpaceService.le_paths(g3, vertex, q)


class TestCommonExtensions:

    def test_g1_e_and_f(self, g1, g1_edges):
        e, f = edge_path(g1, g1_edges["e"]), edge_path(g1, g1_edges["f"])
        assert PathSpaceService.common_extensions(g1, e, f, deg(1, 1)) == [
            (edge_path(g1, g1_edges["g"]), edge_path(g1, g1_edges["h"]))
        ]

    def test_g2_has_none(self, g2):
        assert PathSpaceService.common_extensions(g2, edge_path(g2, "e"), edge_path(g2, "f"), deg(1, 1)) == []

    def test_equal_paths(self, g1, g1_edges):
        e = edge_path(g1, g1_edges["e"])
        q = deg(2, 2)
        extensions = PathSpaceService.common_extensions(g1, e, e, q)
        expected = PathSpaceService.le_paths(g1, e.source_vertex, q - e.degree)
        assert extensions == [(alpha, alpha) for alpha in expected]

    def test_ranges_must_agree(self, g1, g1_edges):
        e, g = edge_path(g1, g1_edges["e"]), edge_path(g1, g1_edges["g"])
        with pytest.raises(PreconditionViolated):
            PathSpaceService.common_extensions(g1, e, g, deg(1, 1))

    def test_degrees_must_fit(self, g1, g1_edges):
        e = edge_path(g1, g1_edges["e"])
        with pytest.raises(PreconditionViolated):
            PathSpaceService.common_extensions(g1, e, e, deg(0, 1))

    @pytest.mark.parametrize("name, q", [("g1", (2, 1)), ("g2", (1, 1)), ("g3", (1, 1)), ("g4", (1, 1))])
    def test_swapping_reverses_pairs(self, name, q):
        g = load_fixture(name)
        q = deg(*q)
        paths = PathSpaceService.all_paths(g, q)
        for lam in paths:
            for mu in paths:
                if lam.range_vertex != mu.range_vertex:
                    continue
                forward = PathSpaceService.common_extensions(g, lam, mu, q)
                backward = PathSpaceService.common_extensions(g, mu, lam, q)
                assert {(beta, alpha) for alpha, beta in forward} == set(backward)
                assert len(forward) == len(backward)


class TestExhaustion:

    @pytest.mark.parametrize("name, q", [("g1", (3, 2)), ("g3", (2, 2)), ("g4", (1, 1)), ("g5", (4,))])
    def test_every_path_extends_into_le_paths(self, name, q):
        g = load_fixture(name)
        q = deg(*q)
        for lam in PathSpaceService.all_paths(g, q):
            extensions = [
                rho for rho in PathSpaceService.le_paths(g, lam.range_vertex, q)
                if lam.degree <= rho.degree
                and PathService.factorise(g, rho, lam.degree, rho.degree - lam.degree)[0] == lam
            ]
            assert extensions, f"{lam} has no extension in Λ^≤{q}"


class TestConvexity:

    def test_g2_witness(self, g2):
        convex, witnesses = PathSpaceService.is_locally_convex(g2)
        assert not convex
        assert [(w.vertex, w.colour_i, w.colour_j, w.lam, w.mu) for w in witnesses] == [("v", 1, 2, "e", "f")]

    @pytest.mark.parametrize("name", ["g1", "g3", "g4", "g5"])
    def test_convex_fixtures(self, name):
        assert PathSpaceService.is_locally_convex(load_fixture(name))[0]


class TestSources:

    def test_g3_has_no_sources(self, g3):
        assert PathSpaceService.source_report(g3) == {}
        assert PathSpaceService.has_no_sources(g3)

    def test_g1_corner(self, g1):
        assert PathSpaceService.source_report(g1)[vertex_of(3, 2)] == [1, 2]

    def test_g2(self, g2):
        assert PathSpaceService.source_report(g2) == {"w": [1, 2], "z": [1, 2]}

    def test_paths_with_source(self, g2):
        assert PathSpaceService.paths_with_source(g2, "w", deg(1, 1)) == [
            PathService.vertex_path(g2, "w"), edge_path(g2, "e"),
        ]


class TestLemmas:

    @pytest.mark.parametrize("name, cap", [("g1", (3, 2)), ("g4", (1, 1)), ("g1", (3, 3)), ("g3", (3, 3)), ("g4", (3, 3))])
    def test_no_counterexamples(self, name, cap):
        assert PathSpaceService.check_le_lemmas(load_fixture(name), deg(*cap)) == []

    def test_g2_factorisation_fails(self, g2):
        counterexamples = PathSpaceService.check_le_lemmas(g2, deg(1, 1))
        assert all(c.lemma == "factorisation" for c in counterexamples)
        assert any(
            c.path == ["f"] and c.vertex == "v" and c.degree == [1, 1] and c.colour == 2
            for c in counterexamples
        )
