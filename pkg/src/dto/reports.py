"""
Report DTO
검증/분석 결과 스키마
"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel

from models.models import BoundaryPath, Path


class PathView(BaseModel):
    """경로 표현 (edges는 outermost first)"""
    range: str
    source: str
    degree: List[int]
    edges: List[str]

    @classmethod
    def of(cls, path: Path) -> "PathView":
        return cls(
            range=path.range_vertex,
            source=path.source_vertex,
            degree=list(path.degree.entries),
            edges=list(path.edges),
        )


class BoundaryPathView(BaseModel):
    """경계 경로 표현"""
    prefix: PathView
    exhausted: List[bool]
    complete: bool

    @classmethod
    def of(cls, boundary_path: BoundaryPath) -> "BoundaryPathView":
        return cls(
            prefix=PathView.of(boundary_path.prefix),
            exhausted=list(boundary_path.exhausted),
            complete=boundary_path.complete,
        )


class CubeViolationReport(BaseModel):
    """큐브 조건 위반 (두 재작성 결과가 다름)"""
    triple: List[str]
    via_visible: List[str]
    via_hidden: List[str]


class ConvexityWitness(BaseModel):
    """local convexity 위반: λ ∈ Λ^{e_i}(v), μ ∈ Λ^{e_j}(v)"""
    vertex: str
    colour_i: int
    colour_j: int
    lam: str
    mu: str


class LemmaCounterexample(BaseModel):
    """Λ^≤q 보조정리 반례"""
    lemma: str  # "inclusion" | "factorisation"
    vertex: str
    degree: List[int]
    colour: Optional[int] = None
    path: List[str]
    detail: str


class RelationViolation(BaseModel):
    """Cuntz-Krieger 관계식 위반"""
    relation: str
    subject: str
    detail: str


class ConditionBStatus(str, Enum):
    PROVEN = "PROVEN"
    WITNESS_TO_DEPTH = "WITNESS_TO_DEPTH"
    REFUTED_TO_DEPTH = "REFUTED_TO_DEPTH"


class ConditionBVerdict(BaseModel):
    """condition (B) 판정"""
    vertex: str
    status: ConditionBStatus
    depth: List[int]
    witness: Optional[BoundaryPathView] = None
    failing_pair: Optional[List[List[str]]] = None
    detail: str = ""


class CoreBlock(BaseModel):
    """F_{q,p}(v) 블록: 행렬 크기 dimension × dimension"""
    degree: List[int]
    vertex: str
    dimension: int


class CoreInclusion(BaseModel):
    """F_{p,p'}(w) → F_{q,a}(u) 포함 다중도"""
    from_level: List[int]
    from_degree: List[int]
    from_vertex: str
    to_degree: List[int]
    to_vertex: str
    multiplicity: int


class CoreBlockReport(BaseModel):
    """AF core 블록 구조"""
    q: List[int]
    blocks: List[CoreBlock]
    inclusions: List[CoreInclusion]
    total_dimension: int
