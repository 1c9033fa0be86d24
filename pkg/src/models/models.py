"""
Domain models
k-graph의 모든 도메인 엔티티 정의 (degree, skeleton, square table, path, boundary path)
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Tuple

from core.exceptions import DegreeMismatch, InvalidDegree

EdgePair = Tuple[str, str]


@dataclass(frozen=True)
class Degree:
    """
    A vector in N^k, the value of the degree functor.

    `<=` is the coordinatewise partial order, so Degrees are sorted by `entries`
    rather than with `sorted()` directly.
    """
    entries: Tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(n, int) or n < 0 for n in self.entries):
            raise InvalidDegree(f"degree entries must be naturals: {self.entries}")

    @classmethod
    def zero(cls, k: int) -> "Degree":
        return cls((0,) * k)

    @classmethod
    def unit(cls, k: int, colour: int) -> "Degree":
        """e_i for a 1-based colour i."""
        return cls(tuple(1 if i == colour - 1 else 0 for i in range(k)))

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def _check_rank(self, other: "Degree"):
        if self.k != other.k:
            raise DegreeMismatch(f"degrees of different rank: {self} vs {other}")

    def __add__(self, other: "Degree") -> "Degree":
        self._check_rank(other)
        return Degree(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Degree") -> "Degree":
        self._check_rank(other)
        if not other <= self:
            raise DegreeMismatch(f"cannot subtract {other} from {self}")
        return Degree(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __le__(self, other: "Degree") -> bool:
        self._check_rank(other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __ge__(self, other: "Degree") -> bool:
        return other <= self

    def join(self, other: "Degree") -> "Degree":
        self._check_rank(other)
        return Degree(tuple(max(a, b) for a, b in zip(self.entries, other.entries)))

    def meet(self, other: "Degree") -> "Degree":
        self._check_rank(other)
        return Degree(tuple(min(a, b) for a, b in zip(self.entries, other.entries)))

    def grid(self) -> Iterator["Degree"]:
        """All p <= self, in lexicographic order."""
        for point in product(*(range(n + 1) for n in self.entries)):
            yield Degree(point)

    def __str__(self) -> str:
        return ",".join(str(n) for n in self.entries)


@dataclass(frozen=True)
class Edge:
    """A skeleton edge of degree e_colour; r(edge) = range, s(edge) = source."""
    id: str
    colour: int
    source: str
    range: str


@dataclass(frozen=True)
class Skeleton:
    """Coloured directed graph of all degree-e_i edges."""
    k: int
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]

    _by_id: Dict[str, Edge] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))
        object.__setattr__(self, "_by_id", {e.id: e for e in self.edges})

    def edge(self, edge_id: str) -> Edge:
        return self._by_id[edge_id]

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._by_id


@dataclass(frozen=True)
class Square:
    """
    A degree e_i + e_j path recorded as its two factorisations, i < j:
    outer_lo·inner_lo (colour i outermost) = outer_hi·inner_hi (colour j outermost).
    """
    outer_lo: str
    inner_lo: str
    outer_hi: str
    inner_hi: str

    @property
    def lo_pair(self) -> EdgePair:
        return (self.outer_lo, self.inner_lo)

    @property
    def hi_pair(self) -> EdgePair:
        return (self.outer_hi, self.inner_hi)

    def as_list(self) -> List[str]:
        return [self.outer_lo, self.inner_lo, self.outer_hi, self.inner_hi]


@dataclass(frozen=True)
class SquareTable:
    squares: Tuple[Square, ...]

    def __post_init__(self):
        object.__setattr__(self, "squares", tuple(sorted(self.squares, key=Square.as_list)))

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self) -> Iterator[Square]:
        return iter(self.squares)


@dataclass(frozen=True)
class KGraph:
    """
    A validated k-graph: skeleton + square table.

    Only KGraphService.validate sets `validated`; the lookup tables below are
    derived from the two inputs and never compared.
    """
    skeleton: Skeleton
    squares: SquareTable
    validated: bool = False

    _incoming: Dict[Tuple[str, int], Tuple[Edge, ...]] = field(init=False, repr=False, compare=False, hash=False)
    _swap: Dict[EdgePair, EdgePair] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        incoming: Dict[Tuple[str, int], List[Edge]] = {}
        for edge in self.skeleton.edges:
            incoming.setdefault((edge.range, edge.colour), []).append(edge)
        object.__setattr__(self, "_incoming", {key: tuple(edges) for key, edges in incoming.items()})

        swap: Dict[EdgePair, EdgePair] = {}
        for square in self.squares:
            swap[square.lo_pair] = square.hi_pair
            swap[square.hi_pair] = square.lo_pair
        object.__setattr__(self, "_swap", swap)

    @property
    def k(self) -> int:
        return self.skeleton.k

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.skeleton.vertices

    def edge(self, edge_id: str) -> Edge:
        return self.skeleton.edge(edge_id)

    def colour(self, edge_id: str) -> int:
        return self.skeleton.edge(edge_id).colour

    def incoming(self, vertex: str, colour: int) -> Tuple[Edge, ...]:
        """Λ^{e_colour}(vertex): edges with range `vertex`, sorted by id."""
        return self._incoming.get((vertex, colour), ())

    def swap(self, outer: str, inner: str) -> EdgePair:
        """The other factorisation of the bi-coloured path outer·inner."""
        return self._swap[(outer, inner)]


@dataclass(frozen=True)
class Path:
    """
    A morphism of the k-graph in colour-block normal form.

    blocks[0] holds the colour-1 edges and is outermost; blocks[k-1] is traversed
    first. Inside a block edges are listed outermost first.
    """
    range_vertex: str
    source_vertex: str
    blocks: Tuple[Tuple[str, ...], ...]

    @property
    def degree(self) -> Degree:
        return Degree(tuple(len(block) for block in self.blocks))

    @property
    def edges(self) -> Tuple[str, ...]:
        return tuple(edge_id for block in self.blocks for edge_id in block)

    @property
    def is_vertex(self) -> bool:
        return not any(self.blocks)

    def sort_key(self):
        return (self.degree.entries, self.blocks, self.range_vertex)

    def __str__(self) -> str:
        return self.range_vertex if self.is_vertex else " ".join(self.edges)


@dataclass(frozen=True)
class BoundaryPath:
    """
    A boundary path seen through a finite prefix.

    exhausted[i] is True only when the boundary condition in direction i+1 was
    verified on the whole face p_i = d(prefix)_i.
    """
    prefix: Path
    exhausted: Tuple[bool, ...]
    cap: Degree

    @property
    def complete(self) -> bool:
        return all(self.exhausted)

    @property
    def range_vertex(self) -> str:
        return self.prefix.range_vertex

    def sort_key(self):
        return (self.prefix.sort_key(), self.exhausted)
