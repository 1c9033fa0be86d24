"""
Representation Service
경계 경로 표현 생성, Cuntz-Krieger 관계식 검증, gauge 사영, core 블록 구조
"""
from collections import Counter, defaultdict
from functools import reduce
from itertools import combinations
from typing import Dict, List, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from sympy import Expr, S, expand
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from core.exceptions import KGraphError, NotLocallyConvex
from core.logging_config import get_logger
from dto.reports import CoreBlock, CoreBlockReport, CoreInclusion, RelationViolation
from models.models import Degree, KGraph, Path
from models.representation import CKRep, SpanElement
from services.boundary_service import BoundaryService
from services.kgraph_service import KGraphService
from services.path_service import PathService
from services.path_space_service import PathSpaceService

logger = get_logger(__name__)

Entries = Dict[Tuple[int, int], Expr]


def _same(a: csr_matrix, b: csr_matrix) -> bool:
    return (a - b).count_nonzero() == 0


class RepresentationService:
    """Cuntz-Krieger 표현 서비스"""

    # ============================================================
    # 표현 생성
    # ============================================================

    @staticmethod
    def build_rep(g: KGraph) -> CKRep:
        """
        ℓ²(Λ^≤∞) 위의 경계 경로 표현

        Raises:
            NotLocallyConvex: local convexity 실패
            InfiniteBoundary: 스켈레톤에 방향 사이클 존재
        """
        convex, witnesses = PathSpaceService.is_locally_convex(g)
        if not convex:
            first = witnesses[0]
            raise NotLocallyConvex(
                f"not locally convex at {first.vertex}: {first.lam} (colour {first.colour_i}) "
                f"and {first.mu} (colour {first.colour_j})",
                detail={"witnesses": [witness.model_dump() for witness in witnesses]},
            )

        basis = BoundaryService.complete_boundary_paths(g)
        cap = KGraphService.max_degree(g)
        index = {x.prefix: i for i, x in enumerate(basis)}
        by_range: Dict[str, List[Tuple[int, Path]]] = defaultdict(list)
        for i, x in enumerate(basis):
            by_range[x.range_vertex].append((i, x.prefix))

        size = len(basis)
        matrices = {}
        for path in PathSpaceService.all_paths(g, cap):
            rows, cols = [], []
            for col, prefix in by_range[path.source_vertex]:
                extended = PathService.compose(g, path, prefix)
                if extended not in index:
                    raise KGraphError(f"{path} · {prefix} is not a boundary path")
                rows.append(index[extended])
                cols.append(col)
            matrices[path] = csr_matrix(
                (np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(size, size), dtype=np.int64
            )

        logger.info(f"boundary path representation: {size} basis vectors, {len(matrices)} paths")
        return CKRep(tuple(basis), matrices, g)

    @staticmethod
    def _paths_upto(rep: CKRep, cap: Degree) -> List[Path]:
        return sorted((path for path in rep.matrices if path.degree <= cap), key=Path.sort_key)

    @staticmethod
    def _vertex_matrix(rep: CKRep, vertex: str) -> csr_matrix:
        return rep.matrix(PathService.vertex_path(rep.graph, vertex))

    # ============================================================
    # 관계식 검증
    # ============================================================

    @staticmethod
    def _relation_four_violations(rep: CKRep, cap: Degree) -> List[RelationViolation]:
        g = rep.graph
        paths = RepresentationService._paths_upto(rep, cap)
        by_range: Dict[str, List[Path]] = defaultdict(list)
        for path in paths:
            by_range[path.range_vertex].append(path)

        violations = []
        for vertex in g.vertices:
            projection = RepresentationService._vertex_matrix(rep, vertex)
            for m in cap.grid():
                total = csr_matrix(projection.shape, dtype=np.int64)
                for path in PathSpaceService.filter_le_paths(g, by_range[vertex], m):
                    s = rep.matrix(path)
                    total = total + s @ CKRep.adjoint(s)
                if not _same(total, projection):
                    violations.append(RelationViolation(
                        relation="4", subject=f"{vertex} @ {m}", detail=f"Σ_{{Λ^≤({m})}} S_λ S_λ* != S_{vertex}",
                    ))
        return violations

    @staticmethod
    def verify_ck_relations(rep: CKRep, cap: Degree) -> List[RelationViolation]:
        """
        (1) S_v 는 서로 직교하는 사영
        (2) S_λ S_μ = S_λμ
        (3) S_λ* S_λ = S_s(λ)
        (4) S_v = Σ_{λ ∈ Λ^≤m(v)} S_λ S_λ*,  m ≤ cap

        Returns:
            List[RelationViolation]: 빈 목록이면 모두 성립
        """
        g = rep.graph
        violations = []

        projections = {vertex: RepresentationService._vertex_matrix(rep, vertex) for vertex in g.vertices}
        for vertex, p in projections.items():
            if not _same(p, CKRep.adjoint(p)) or not _same(p @ p, p):
                violations.append(RelationViolation(relation="1", subject=vertex, detail=f"S_{vertex} is not a projection"))
        for v, w in combinations(g.vertices, 2):
            if (projections[v] @ projections[w]).count_nonzero():
                violations.append(RelationViolation(relation="1", subject=f"{v},{w}", detail=f"S_{v} S_{w} != 0"))

        paths = RepresentationService._paths_upto(rep, cap)
        by_range: Dict[str, List[Path]] = defaultdict(list)
        for path in paths:
            by_range[path.range_vertex].append(path)

        for lam in paths:
            s = rep.matrix(lam)
            for mu in by_range[lam.source_vertex]:
                product = PathService.compose(g, lam, mu)
                if not _same(s @ rep.matrix(mu), rep.matrix(product)):
                    violations.append(RelationViolation(
                        relation="2", subject=f"{lam} | {mu}", detail=f"S_({lam}) S_({mu}) != S_({product})",
                    ))
            if not _same(CKRep.adjoint(s) @ s, projections[lam.source_vertex]):
                violations.append(RelationViolation(
                    relation="3", subject=str(lam), detail=f"S_({lam})* S_({lam}) != S_{lam.source_vertex}",
                ))

        violations.extend(RepresentationService._relation_four_violations(rep, cap))
        logger.debug(f"CK relations up to {cap}: {len(violations)} violations")
        return violations

    @staticmethod
    def verify_edge_relations(rep: CKRep) -> List[RelationViolation]:
        """Λ^{e_i}(v) ≠ ∅ 이면 S_v = Σ_{e ∈ Λ^{e_i}(v)} S_e S_e*"""
        g = rep.graph
        violations = []
        for vertex in g.vertices:
            projection = RepresentationService._vertex_matrix(rep, vertex)
            for colour in range(1, g.k + 1):
                edges = g.incoming(vertex, colour)
                if not edges:
                    continue
                total = reduce(
                    lambda acc, s: acc + s @ CKRep.adjoint(s),
                    (rep.matrix(PathService.path_from_edges(g, [edge.id])) for edge in edges),
                    csr_matrix(projection.shape, dtype=np.int64),
                )
                if not _same(total, projection):
                    violations.append(RelationViolation(
                        relation="edge", subject=f"{vertex} @ colour {colour}",
                        detail=f"Σ_{{Λ^e{colour}({vertex})}} S_e S_e* != S_{vertex}",
                    ))
        return violations

    @staticmethod
    def verify_edge_level_equivalence(rep: CKRep, cap: Degree) -> bool:
        """간선 수준 관계식과 (4)의 성립 여부가 일치하는지"""
        edge_ok = not RepresentationService.verify_edge_relations(rep)
        full_ok = not RepresentationService._relation_four_violations(rep, cap)
        return edge_ok == full_ok

    @staticmethod
    def verify_spanning_formula(rep: CKRep, cap: Degree) -> List[RelationViolation]:
        """
        r(λ) = r(μ), d(λ)∨d(μ) ≤ q ≤ cap 일 때
        S_λ* S_μ = Σ_{(α,β) ∈ Λ^min_q(λ,μ)} S_α S_β*
        및 λ, μ ∈ Λ^≤q(v) 에 대해 S_λ* S_μ = δ_{λ,μ} S_s(λ)
        """
        g = rep.graph
        violations = []
        for vertex in g.vertices:
            paths = PathSpaceService.paths_upto(g, vertex, cap)
            for q in cap.grid():
                le = set(PathSpaceService.filter_le_paths(g, paths, q))
                candidates = [path for path in paths if path.degree <= q]
                for lam in candidates:
                    left = CKRep.adjoint(rep.matrix(lam))
                    for mu in candidates:
                        lhs = left @ rep.matrix(mu)
                        rhs = csr_matrix(lhs.shape, dtype=np.int64)
                        for alpha, beta in PathSpaceService.common_extensions(g, lam, mu, q):
                            rhs = rhs + rep.matrix(alpha) @ CKRep.adjoint(rep.matrix(beta))
                        if not _same(lhs, rhs):
                            violations.append(RelationViolation(
                                relation="spanning", subject=f"{lam} | {mu} @ {q}",
                                detail=f"S_({lam})* S_({mu}) does not expand over Λ^min_{q}",
                            ))
                        if lam in le and mu in le:
                            expected = (
                                RepresentationService._vertex_matrix(rep, lam.source_vertex)
                                if lam == mu else csr_matrix(lhs.shape, dtype=np.int64)
                            )
                            if not _same(lhs, expected):
                                violations.append(RelationViolation(
                                    relation="orthogonality", subject=f"{lam} | {mu} @ {q}",
                                    detail=f"S_({lam})* S_({mu}) != δ S_{lam.source_vertex}",
                                ))
        return violations

    # ============================================================
    # forced zero
    # ============================================================

    @staticmethod
    def forced_zero_generators(g: KGraph) -> List[Path]:
        """
        모든 CK family에서 0이 되는 vertex/edge 생성자 (fixpoint)
        길이 2 이상의 경로는 forced_zero_paths 가 따로 계산한다.

        - colour j 입력이 있고, colour i 간선 e에 대해 s(e)로 colour j 입력이 없으면 e = 0
        - colour i 입력 간선이 모두 0이면 그 vertex = 0
        - 0인 vertex에 닿는 간선 = 0
        """
        forced_edges = set()
        forced_vertices = set()

        for vertex in g.vertices:
            for i in range(1, g.k + 1):
                for j in range(1, g.k + 1):
                    if i == j or not g.incoming(vertex, j):
                        continue
                    for edge in g.incoming(vertex, i):
                        if not g.incoming(edge.source, j):
                            forced_edges.add(edge.id)

        changed = True
        while changed:
            changed = False
            for vertex in g.vertices:
                if vertex in forced_vertices:
                    continue
                if any(
                    g.incoming(vertex, colour) and all(edge.id in forced_edges for edge in g.incoming(vertex, colour))
                    for colour in range(1, g.k + 1)
                ):
                    forced_vertices.add(vertex)
                    changed = True
            for edge in g.skeleton.edges:
                if edge.id not in forced_edges and (edge.source in forced_vertices or edge.range in forced_vertices):
                    forced_edges.add(edge.id)
                    changed = True

        generators = [PathService.vertex_path(g, vertex) for vertex in forced_vertices]
        generators += [PathService.path_from_edges(g, [edge_id]) for edge_id in forced_edges]
        return sorted(generators, key=Path.sort_key)

    @staticmethod
    def forced_zero_paths(g: KGraph, cap: Degree) -> List[Path]:
        """
        d(λ) ≤ cap 이고 어떤 spelling 이 forced zero 생성자를 지나는 경로

        s_λ 는 spelling 의 간선 곱이므로 한 인수가 0이면 s_λ = 0.
        """
        forced = RepresentationService.forced_zero_generators(g)
        forced_vertices = {path.range_vertex for path in forced if path.is_vertex}
        forced_edges = {path.edges[0] for path in forced if not path.is_vertex}

        found = []
        for path in PathSpaceService.all_paths(g, cap):
            if path.is_vertex:
                if path.range_vertex in forced_vertices:
                    found.append(path)
            elif any(forced_edges.intersection(spelling) for spelling in PathService.edge_spellings(g, path)):
                found.append(path)
        return found

    # ============================================================
    # gauge / core
    # ============================================================

    @staticmethod
    def gauge_project(element: SpanElement) -> SpanElement:
        """Φ: d(α) = d(β) 인 항만 남김"""
        return SpanElement(tuple(term for term in element.terms if term.alpha.degree == term.beta.degree))

    @staticmethod
    def evaluate_span(rep: CKRep, element: SpanElement) -> Entries:
        """Σ c·S_α S_β* 의 0이 아닌 성분 (row, col) → 계수"""
        entries: Entries = {}
        for term in element.terms:
            product = (rep.matrix(term.alpha) @ CKRep.adjoint(rep.matrix(term.beta))).tocoo()
            for row, col, value in zip(product.row, product.col, product.data):
                key = (int(row), int(col))
                entries[key] = expand(entries.get(key, S.Zero) + term.coefficient * int(value))
        return {key: value for key, value in entries.items() if value != 0}

    @staticmethod
    def block_diagonal_part(rep: CKRep, entries: Entries) -> Entries:
        """d(x) = d(y) 인 성분 (row x, col y)만 남김"""
        return {
            (row, col): value
            for (row, col), value in entries.items()
            if rep.basis[row].prefix.degree == rep.basis[col].prefix.degree
        }

    @staticmethod
    def core_report(g: KGraph, q: Degree) -> CoreBlockReport:
        """
        F_q = span{s_α s_β* : α, β ∈ Λ^≤q, s(α) = s(β), d(α) = d(β)} 의 블록 구조

        블록 (p, v)의 크기는 #{λ ∈ Λ^≤q : d(λ) = p, s(λ) = v}.
        p ≤ q 인 모든 단계에 대해 F_p → F_q 포함 다중도를 계산한다.
        """
        all_paths = {vertex: PathSpaceService.paths_upto(g, vertex, q) for vertex in g.vertices}

        def le(vertex: str, level: Degree) -> List[Path]:
            candidates = [path for path in all_paths[vertex] if path.degree <= level]
            return PathSpaceService.filter_le_paths(g, candidates, level)

        def blocks_at(level: Degree) -> Counter:
            return Counter(
                (path.degree.entries, path.source_vertex)
                for vertex in g.vertices
                for path in le(vertex, level)
            )

        top = blocks_at(q)
        blocks = [
            CoreBlock(degree=list(degree), vertex=vertex, dimension=dimension)
            for (degree, vertex), dimension in sorted(top.items())
        ]

        inclusions = []
        for level in q.grid():
            if level == q:
                continue
            rest = q - level
            for degree, vertex in sorted(blocks_at(level)):
                targets = Counter(
                    (tuple(a + b for a, b in zip(degree, alpha.degree.entries)), alpha.source_vertex)
                    for alpha in le(vertex, rest)
                )
                for (to_degree, to_vertex), multiplicity in sorted(targets.items()):
                    inclusions.append(CoreInclusion(
                        from_level=list(level.entries),
                        from_degree=list(degree),
                        from_vertex=vertex,
                        to_degree=list(to_degree),
                        to_vertex=to_vertex,
                        multiplicity=multiplicity,
                    ))

        return CoreBlockReport(
            q=list(q.entries),
            blocks=blocks,
            inclusions=inclusions,
            total_dimension=sum(block.dimension ** 2 for block in blocks),
        )

    @staticmethod
    def span_dimension(rep: CKRep) -> int:
        """dim span{S_α S_β* : s(α) = s(β)} (QQ 위의 rank)"""
        by_source: Dict[str, List[Path]] = defaultdict(list)
        for path in rep.matrices:
            by_source[path.source_vertex].append(path)

        width = rep.size * rep.size
        patterns = set()
        for paths in by_source.values():
            for alpha in paths:
                s = rep.matrix(alpha)
                for beta in paths:
                    product = (s @ CKRep.adjoint(rep.matrix(beta))).tocoo()
                    pattern = frozenset(
                        int(row) * rep.size + int(col)
                        for row, col, value in zip(product.row, product.col, product.data)
                        if value
                    )
                    if pattern:
                        patterns.add(pattern)

        if not patterns:
            return 0
        rows = {i: {column: QQ(1) for column in pattern} for i, pattern in enumerate(sorted(patterns, key=sorted))}
        return DomainMatrix(rows, (len(rows), width), QQ).rank()

