"""
Path Space Service
Λ^m(v), Λ^≤q(v), 공통 확장, local convexity, source 판정
"""
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from core.exceptions import DegreeMismatch, PreconditionViolated, UnknownVertex
from core.logging_config import get_logger
from dto.reports import ConvexityWitness, LemmaCounterexample
from models.models import Degree, KGraph, Path
from services.path_service import PathService

logger = get_logger(__name__)

Chain = Tuple[Tuple[str, ...], str]


class PathSpaceService:
    """경로 공간 열거 서비스"""

    @staticmethod
    def _check_vertex_and_degree(g: KGraph, vertex: str, degree: Degree):
        if vertex not in g.vertices:
            raise UnknownVertex(f"unknown vertex {vertex!r}")
        if degree.k != g.k:
            raise DegreeMismatch(f"degree {degree} has {degree.k} entries, graph has k = {g.k}")

    @staticmethod
    def _chains(g: KGraph, start: str, colour: int, lengths: range) -> List[Chain]:
        """start에서 출발(range)하는 colour 간선 사슬 중 길이가 lengths에 속하는 것"""
        found: List[Chain] = []
        frontier: List[Chain] = [((), start)]
        for length in range(lengths.stop):
            if length >= lengths.start:
                found.extend(frontier)
            if length + 1 == lengths.stop:
                break
            frontier = [
                (chain + (edge.id,), edge.source)
                for chain, end in frontier
                for edge in g.incoming(end, colour)
            ]
            if not frontier:
                break
        return found

    @staticmethod
    def _paths(g: KGraph, vertex: str, lengths_per_colour: List[range]) -> List[Path]:
        partial: List[Tuple[Tuple[Tuple[str, ...], ...], str]] = [((), vertex)]
        for colour, lengths in enumerate(lengths_per_colour, start=1):
            partial = [
                (blocks + (chain,), end)
                for blocks, current in partial
                for chain, end in PathSpaceService._chains(g, current, colour, lengths)
            ]
        paths = [Path(vertex, end, blocks) for blocks, end in partial]
        return sorted(paths, key=Path.sort_key)

    @staticmethod
    def paths_of_degree(g: KGraph, vertex: str, m: Degree) -> List[Path]:
        """Λ^m(v) = {λ : r(λ) = v, d(λ) = m}, 블록 1부터 DFS"""
        PathSpaceService._check_vertex_and_degree(g, vertex, m)
        return PathSpaceService._paths(g, vertex, [range(n, n + 1) for n in m])

    @staticmethod
    def paths_upto(g: KGraph, vertex: str, cap: Degree) -> List[Path]:
        """{λ : r(λ) = v, d(λ) ≤ cap}"""
        PathSpaceService._check_vertex_and_degree(g, vertex, cap)
        return PathSpaceService._paths(g, vertex, [range(0, n + 1) for n in cap])

    @staticmethod
    def all_paths(g: KGraph, cap: Degree) -> List[Path]:
        paths = [path for vertex in g.vertices for path in PathSpaceService.paths_upto(g, vertex, cap)]
        return sorted(paths, key=Path.sort_key)

    @staticmethod
    def paths_with_source(g: KGraph, vertex: str, cap: Degree) -> List[Path]:
        """{λ : s(λ) = v, d(λ) ≤ cap}"""
        if vertex not in g.vertices:
            raise UnknownVertex(f"unknown vertex {vertex!r}")
        return [path for path in PathSpaceService.all_paths(g, cap) if path.source_vertex == vertex]

    @staticmethod
    def is_le_path(g: KGraph, path: Path, q: Degree) -> bool:
        """d(λ) ≤ q 이고, d(λ)+e_i ≤ q 인 모든 i에 대해 s(λ)로 들어오는 colour i 간선이 없음"""
        d = path.degree
        if not d <= q:
            return False
        return all(
            not g.incoming(path.source_vertex, colour)
            for colour in range(1, g.k + 1)
            if d[colour - 1] < q[colour - 1]
        )

    @staticmethod
    def filter_le_paths(g: KGraph, paths: List[Path], q: Degree) -> List[Path]:
        """미리 열거한 경로 목록에서 Λ^≤q 원소만 선택"""
        return [path for path in paths if PathSpaceService.is_le_path(g, path, q)]

    @staticmethod
    def le_paths(g: KGraph, vertex: str, q: Degree) -> List[Path]:
        """
        Λ^≤q(v)

        Returns:
            List[Path]: 비어 있지 않음 (정렬됨)
        """
        return PathSpaceService.filter_le_paths(g, PathSpaceService.paths_upto(g, vertex, q), q)

    @staticmethod
    def common_extensions(g: KGraph, lam: Path, mu: Path, q: Degree) -> List[Tuple[Path, Path]]:
        """
        Λ^min_q(λ, μ) = {(α, β) : λα = μβ ∈ Λ^≤q}

        Raises:
            PreconditionViolated: r(λ) != r(μ) 또는 d(λ), d(μ) ≰ q
        """
        if lam.range_vertex != mu.range_vertex:
            raise PreconditionViolated(f"r({lam}) = {lam.range_vertex} but r({mu}) = {mu.range_vertex}")
        if not (lam.degree <= q and mu.degree <= q):
            raise PreconditionViolated(f"degrees {lam.degree} and {mu.degree} must be <= {q}")

        floor = lam.degree.join(mu.degree)
        extensions = []
        for rho in PathSpaceService.le_paths(g, lam.range_vertex, q):
            if not floor <= rho.degree:
                continue
            head, alpha = PathService.factorise(g, rho, lam.degree, rho.degree - lam.degree)
            if head != lam:
                continue
            head, beta = PathService.factorise(g, rho, mu.degree, rho.degree - mu.degree)
            if head == mu:
                extensions.append((alpha, beta))
        return sorted(extensions, key=lambda pair: (pair[0].sort_key(), pair[1].sort_key()))

    @staticmethod
    def convexity_witnesses(g: KGraph) -> List[ConvexityWitness]:
        """λ ∈ Λ^{e_i}(v), μ ∈ Λ^{e_j}(v) 인데 Λ^{e_j}(s(λ)) 또는 Λ^{e_i}(s(μ))가 빈 경우"""
        witnesses = []
        for vertex in g.vertices:
            for i, j in combinations(range(1, g.k + 1), 2):
                for lam in g.incoming(vertex, i):
                    for mu in g.incoming(vertex, j):
                        if not g.incoming(lam.source, j) or not g.incoming(mu.source, i):
                            witnesses.append(ConvexityWitness(
                                vertex=vertex, colour_i=i, colour_j=j, lam=lam.id, mu=mu.id,
                            ))
        return witnesses

    @staticmethod
    def is_locally_convex(g: KGraph) -> Tuple[bool, List[ConvexityWitness]]:
        witnesses = PathSpaceService.convexity_witnesses(g)
        return not witnesses, witnesses

    @staticmethod
    def source_report(g: KGraph) -> Dict[str, List[int]]:
        """vertex → 들어오는 간선이 없는 colour 목록 (빈 목록은 생략)"""
        report = {}
        for vertex in g.vertices:
            missing = [colour for colour in range(1, g.k + 1) if not g.incoming(vertex, colour)]
            if missing:
                report[vertex] = missing
        return report

    @staticmethod
    def has_no_sources(g: KGraph) -> bool:
        return not PathSpaceService.source_report(g)

    @staticmethod
    def check_le_lemmas(g: KGraph, cap: Degree) -> List[LemmaCounterexample]:
        """
        m, n ≤ cap 에 대해
        (inclusion) λ ∈ Λ^≤m, α ∈ Λ^≤n(s(λ)) ⇒ λα ∈ Λ^≤(m+n)
        (factorisation) m_j ≥ 1 ⇒ Λ^≤m(v) = {λ'λ'' : λ' ∈ Λ^≤(m-e_j)(v), λ'' ∈ Λ^≤e_j(s(λ'))}

        factorisation은 locally convex가 아닐 때 실패할 수 있다.
        """
        grid = list(cap.grid())
        everything = {vertex: PathSpaceService.paths_upto(g, vertex, cap) for vertex in g.vertices}

        @lru_cache(maxsize=None)
        def le(vertex: str, q: Degree) -> Tuple[Path, ...]:
            candidates = [path for path in everything[vertex] if path.degree <= q]
            return tuple(PathSpaceService.filter_le_paths(g, candidates, q))

        counterexamples = []
        for m in grid:
            for vertex in g.vertices:
                for lam in le(vertex, m):
                    for n in grid:
                        target = m + n
                        for alpha in le(lam.source_vertex, n):
                            product = PathService.compose(g, lam, alpha)
                            if not PathSpaceService.is_le_path(g, product, target):
                                counterexamples.append(LemmaCounterexample(
                                    lemma="inclusion",
                                    vertex=vertex,
                                    degree=list(target.entries),
                                    path=list(product.edges),
                                    detail=f"{lam} · {alpha} is not in Λ^≤({target})",
                                ))

        for m in grid:
            for colour in range(1, g.k + 1):
                if m[colour - 1] == 0:
                    continue
                unit = Degree.unit(g.k, colour)
                lower = m - unit
                for vertex in g.vertices:
                    expected = set(le(vertex, m))
                    factored = {
                        PathService.compose(g, head, tail)
                        for head in le(vertex, lower)
                        for tail in le(head.source_vertex, unit)
                    }
                    for path in sorted(expected ^ factored, key=Path.sort_key):
                        missing = path in expected
                        counterexamples.append(LemmaCounterexample(
                            lemma="factorisation",
                            vertex=vertex,
                            degree=list(m.entries),
                            colour=colour,
                            path=list(path.edges) or [vertex],
                            detail=(
                                f"{path} ∈ Λ^≤({m})({vertex}) does not factor through Λ^≤({lower})({vertex})"
                                if missing else
                                f"{path} factors through Λ^≤({lower})({vertex}) but is not in Λ^≤({m})({vertex})"
                            ),
                        ))

        logger.debug(f"le lemmas up to {cap}: {len(counterexamples)} counterexamples")
        return counterexamples
