"""
Document DTO
k-graph 문서 스키마 (vertices, coloured edges, squares)
"""
from typing import Annotated, List

from pydantic import BaseModel, ConfigDict, Field


class EdgeRecord(BaseModel):
    """스켈레톤 간선 (outer-first 규약: r(edge)=range, s(edge)=source)"""
    model_config = ConfigDict(extra="forbid")

    id: str = Field(..., min_length=1)
    colour: int
    source: str
    range: str


SquareRecord = Annotated[List[str], Field(min_length=4, max_length=4)]


class KGraphDocument(BaseModel):
    """
    k-graph 문서
    squares: [outer_lo, inner_lo, outer_hi, inner_hi]
    """
    model_config = ConfigDict(extra="forbid")

    k: int = Field(..., ge=1)
    vertices: List[str] = []
    edges: List[EdgeRecord] = []
    squares: List[SquareRecord] = []
