"""
DTO 모듈
Pydantic 문서/보고서/응답 스키마
"""
from dto.document import EdgeRecord, KGraphDocument
from dto.reports import (
    PathView,
    BoundaryPathView,
    CubeViolationReport,
    ConvexityWitness,
    LemmaCounterexample,
    RelationViolation,
    ConditionBStatus,
    ConditionBVerdict,
    CoreBlock,
    CoreInclusion,
    CoreBlockReport,
)
from dto.responses import CommandResponse

__all__ = [
    # Document
    "EdgeRecord",
    "KGraphDocument",

    # Reports
    "PathView",
    "BoundaryPathView",
    "CubeViolationReport",
    "ConvexityWitness",
    "LemmaCounterexample",
    "RelationViolation",
    "ConditionBStatus",
    "ConditionBVerdict",
    "CoreBlock",
    "CoreInclusion",
    "CoreBlockReport",

    # Response
    "CommandResponse",
]
