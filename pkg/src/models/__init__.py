"""
Models 모듈
k-graph 도메인 엔티티
"""
from models.models import Degree, Edge, Skeleton, Square, SquareTable, KGraph, Path, BoundaryPath
from models.representation import CKRep, SpanTerm, SpanElement
from models.lattice import VertexSet, VertexLattice

__all__ = [
    "Degree",
    "Edge",
    "Skeleton",
    "Square",
    "SquareTable",
    "KGraph",
    "Path",
    "BoundaryPath",
    "CKRep",
    "SpanTerm",
    "SpanElement",
    "VertexSet",
    "VertexLattice",
]
