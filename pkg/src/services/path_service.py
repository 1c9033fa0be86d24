"""
Path Service
경로 합성/분해 (square 재작성), 부분 경로, spelling 열거
"""
from collections import defaultdict, deque
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from core.exceptions import DegreeMismatch, NotComposable, UnknownEdgeId, UnknownVertex
from models.models import Degree, KGraph, Path


class PathService:
    """colour-block normal form 경로 연산"""

    @staticmethod
    def _reorder(g: KGraph, word: Sequence[str], target: Sequence[int]) -> List[str]:
        """
        합성 가능한 간선열을 색 순서 target으로 재작성

        같은 색끼리의 상대 순서는 유지되므로 각 간선의 목표 위치(rank)로 gnome sort;
        인접 교환은 항상 square swap.
        """
        slots: Dict[int, deque] = defaultdict(deque)
        for position, colour in enumerate(target):
            slots[colour].append(position)
        ranks = [slots[g.colour(edge_id)].popleft() for edge_id in word]

        letters = list(word)
        i = 0
        while i < len(letters) - 1:
            if ranks[i] > ranks[i + 1]:
                letters[i], letters[i + 1] = g.swap(letters[i], letters[i + 1])
                ranks[i], ranks[i + 1] = ranks[i + 1], ranks[i]
                i = max(i - 1, 0)
            else:
                i += 1
        return letters

    @staticmethod
    def _from_sorted(g: KGraph, range_vertex: str, letters: Sequence[str]) -> Path:
        """색 오름차순으로 정렬된 간선열 → Path"""
        blocks: List[List[str]] = [[] for _ in range(g.k)]
        for edge_id in letters:
            blocks[g.colour(edge_id) - 1].append(edge_id)
        source_vertex = g.edge(letters[-1]).source if letters else range_vertex
        return Path(range_vertex, source_vertex, tuple(tuple(block) for block in blocks))

    @staticmethod
    def vertex_path(g: KGraph, vertex: str) -> Path:
        if vertex not in g.vertices:
            raise UnknownVertex(f"unknown vertex {vertex!r}")
        return Path(vertex, vertex, tuple(() for _ in range(g.k)))

    @staticmethod
    def path_from_edges(g: KGraph, edges: Sequence[str], vertex: Optional[str] = None) -> Path:
        """
        outermost-first 간선열 → normal form 경로

        Args:
            edges: 합성 가능한 간선 id 목록 (s(edges[i]) = r(edges[i+1]))
            vertex: edges가 비었을 때 사용할 vertex

        Raises:
            UnknownEdgeId, NotComposable
        """
        if not edges:
            if vertex is None:
                raise NotComposable("an empty edge list needs a vertex")
            return PathService.vertex_path(g, vertex)

        for edge_id in edges:
            if not g.skeleton.has_edge(edge_id):
                raise UnknownEdgeId(f"unknown edge {edge_id!r}")
        for outer, inner in zip(edges, edges[1:]):
            if g.edge(outer).source != g.edge(inner).range:
                raise NotComposable(f"s({outer}) = {g.edge(outer).source} but r({inner}) = {g.edge(inner).range}")

        range_vertex = g.edge(edges[0]).range
        target = sorted(g.colour(edge_id) for edge_id in edges)
        return PathService._from_sorted(g, range_vertex, PathService._reorder(g, edges, target))

    @staticmethod
    def compose(g: KGraph, outer: Path, inner: Path) -> Path:
        """
        outer·inner (inner를 먼저 지나감)

        Raises:
            NotComposable: s(outer) != r(inner)
        """
        if outer.source_vertex != inner.range_vertex:
            raise NotComposable(
                f"s({outer}) = {outer.source_vertex} but r({inner}) = {inner.range_vertex}"
            )
        if inner.is_vertex:
            return outer
        if outer.is_vertex:
            return inner

        word = outer.edges + inner.edges
        target = sorted(g.colour(edge_id) for edge_id in word)
        return PathService._from_sorted(g, outer.range_vertex, PathService._reorder(g, word, target))

    @staticmethod
    def factorise(g: KGraph, path: Path, m: Degree, n: Degree) -> Tuple[Path, Path]:
        """
        unique factorisation: path = μν, d(μ) = m, d(ν) = n

        Raises:
            DegreeMismatch: m + n != d(path)
        """
        if m.k != g.k or n.k != g.k or m + n != path.degree:
            raise DegreeMismatch(f"{m} + {n} is not the degree {path.degree} of {path}")

        target = [colour for colour in range(1, g.k + 1) for _ in range(m[colour - 1])]
        target += [colour for colour in range(1, g.k + 1) for _ in range(n[colour - 1])]
        letters = PathService._reorder(g, path.edges, target)

        split = m.total
        head, tail = letters[:split], letters[split:]
        mu = PathService._from_sorted(g, path.range_vertex, head)
        nu = PathService._from_sorted(g, mu.source_vertex, tail)
        return mu, nu

    @staticmethod
    def segment(g: KGraph, path: Path, p: Degree, q: Degree) -> Path:
        """λ(p, q): λ = λ(0,p)·λ(p,q)·λ(q,d(λ)) 의 가운데 부분"""
        d = path.degree
        if not (p <= q and q <= d):
            raise DegreeMismatch(f"segment needs {p} <= {q} <= {d}")
        _, rest = PathService.factorise(g, path, p, d - p)
        middle, _ = PathService.factorise(g, rest, q - p, d - q)
        return middle

    @staticmethod
    def initial_segment(g: KGraph, path: Path, p: Degree) -> Path:
        """λ(0, p ∧ d(λ))"""
        cut = p.meet(path.degree)
        head, _ = PathService.factorise(g, path, cut, path.degree - cut)
        return head

    @staticmethod
    def grid_vertices(g: KGraph, path: Path) -> Dict[Degree, str]:
        """p ≤ d(λ) 마다 s(λ(0,p)), 즉 x_λ(p)"""
        return {
            p: PathService.initial_segment(g, path, p).source_vertex
            for p in path.degree.grid()
        }

    @staticmethod
    def edge_spellings(g: KGraph, path: Path) -> List[Tuple[str, ...]]:
        """
        경로를 간선열로 쓰는 모든 방법

        색 단어의 multiset permutation 하나당 정확히 하나 (unique factorisation)
        """
        if path.is_vertex:
            return [()]
        colours = [g.colour(edge_id) for edge_id in path.edges]
        return sorted(
            tuple(PathService._reorder(g, path.edges, arrangement))
            for arrangement in multiset_permutations(colours)
        )
