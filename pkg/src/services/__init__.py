"""
Services 모듈
k-graph 계산 로직 레이어
"""
from services.kgraph_service import KGraphService
from services.path_service import PathService
from services.path_space_service import PathSpaceService
from services.boundary_service import BoundaryService
from services.representation_service import RepresentationService
from services.ideal_service import IdealService
from services.document_service import DocumentService
from services.sampler_service import SamplerService

__all__ = [
    "KGraphService",
    "PathService",
    "PathSpaceService",
    "BoundaryService",
    "RepresentationService",
    "IdealService",
    "DocumentService",
    "SamplerService",
]
