"""
Sampler Service
시드 기반 무작위 2-graph / span 원소 생성 (property 테스트용)
"""
import random
from collections import defaultdict
from typing import Dict, List

from sympy import I, Rational

from core.exceptions import TooLarge
from core.logging_config import get_logger
from models.models import Degree, Edge, KGraph, Path, Skeleton
from models.representation import SpanElement, SpanTerm
from services.kgraph_service import KGraphService
from services.path_space_service import PathSpaceService

logger = get_logger(__name__)


class SamplerService:
    """무작위 샘플링 서비스"""

    @staticmethod
    def random_two_graph(
        rng: random.Random,
        max_vertices: int = 6,
        max_edges_per_colour: int = 4,
        attempts: int = 200,
    ) -> KGraph:
        """
        무작위 스켈레톤을 뽑고 square table 이 존재하면 그 중 하나를 선택 (rejection)

        Raises:
            TooLarge: attempts 안에 k-graph 를 만들지 못함
        """
        for _ in range(attempts):
            vertices = [f"v{i}" for i in range(rng.randint(1, max_vertices))]
            edges = [
                Edge(f"{'ab'[colour - 1]}{n}", colour, rng.choice(vertices), rng.choice(vertices))
                for colour in (1, 2)
                for n in range(rng.randint(0, max_edges_per_colour))
            ]
            skeleton = Skeleton(2, tuple(vertices), tuple(edges))
            try:
                tables = KGraphService.enumerate_square_sets(skeleton)
            except TooLarge:
                continue
            if tables:
                return KGraphService.validate(skeleton, rng.choice(tables))
        raise TooLarge(f"no 2-graph found in {attempts} attempts")

    @staticmethod
    def random_locally_convex_two_graph(rng: random.Random, attempts: int = 200, **options) -> KGraph:
        for _ in range(attempts):
            g = SamplerService.random_two_graph(rng, **options)
            if PathSpaceService.is_locally_convex(g)[0]:
                return g
        raise TooLarge(f"no locally convex 2-graph found in {attempts} attempts")

    @staticmethod
    def random_span_element(rng: random.Random, g: KGraph, cap: Degree, terms: int = 4) -> SpanElement:
        """s(α) = s(β) 인 (α, β)에 무작위 Gaussian 유리수 계수"""
        by_source: Dict[str, List[Path]] = defaultdict(list)
        for path in PathSpaceService.all_paths(g, cap):
            by_source[path.source_vertex].append(path)
        sources = sorted(by_source)

        chosen = []
        for _ in range(terms):
            paths = by_source[rng.choice(sources)]
            coefficient = Rational(rng.randint(-5, 5), rng.randint(1, 4)) + I * Rational(rng.randint(-5, 5), rng.randint(1, 4))
            chosen.append(SpanTerm(rng.choice(paths), rng.choice(paths), coefficient))
        return SpanElement(tuple(chosen))
