"""
Vertex set models
"""
from dataclasses import dataclass
from typing import Callable, FrozenSet, List, Tuple

from core.exceptions import NotHereditary


@dataclass(frozen=True)
class VertexSet:
    members: FrozenSet[str]
    hereditary: bool
    saturated: bool

    def sorted_members(self) -> List[str]:
        return sorted(self.members)


@dataclass(frozen=True)
class VertexLattice:
    """
    Saturated hereditary vertex sets ordered by inclusion.

    meet is intersection; join is the saturation of the hereditary closure of
    the union, supplied by the caller as `closure`.
    """
    elements: Tuple[VertexSet, ...]
    closure: Callable[[FrozenSet[str]], FrozenSet[str]]

    def __len__(self) -> int:
        return len(self.elements)

    def _lookup(self, members: FrozenSet[str]) -> VertexSet:
        for element in self.elements:
            if element.members == members:
                return element
        # 국소 볼록이 아니면 saturation 이 hereditary 성질을 깰 수 있다
        raise NotHereditary(
            f"{sorted(members)} is not a saturated hereditary set", detail={"members": sorted(members)}
        )

    def meet(self, a: VertexSet, b: VertexSet) -> VertexSet:
        return self._lookup(a.members & b.members)

    def join(self, a: VertexSet, b: VertexSet) -> VertexSet:
        return self._lookup(self.closure(a.members | b.members))

    def covers(self) -> List[Tuple[VertexSet, VertexSet]]:
        """(lower, upper) pairs with nothing strictly between them."""
        pairs = []
        for lower in self.elements:
            for upper in self.elements:
                if not lower.members < upper.members:
                    continue
                if not any(lower.members < middle.members < upper.members for middle in self.elements):
                    pairs.append((lower, upper))
        return pairs
