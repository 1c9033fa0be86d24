"""
공통 fixture
fixtures/*.kgraph 문서 로드
"""
from pathlib import Path as FilePath

import pytest

from models.models import Degree, KGraph
from services.document_service import DocumentService
from services.kgraph_service import KGraphService
from services.path_service import PathService

FIXTURE_DIR = FilePath(__file__).parent.parent / "fixtures"


def fixture_path(name: str) -> FilePath:
    return FIXTURE_DIR / f"{name}.kgraph"


def load_fixture(name: str) -> KGraph:
    return DocumentService.load(fixture_path(name))


def deg(*entries: int) -> Degree:
    return Degree(tuple(entries))


def edge_path(g: KGraph, *edges: str):
    return PathService.path_from_edges(g, list(edges))


def vertex_of(*point: int) -> str:
    return KGraphService.omega_vertex(point)


@pytest.fixture
def g1() -> KGraph:
    return load_fixture("g1")


@pytest.fixture
def g2() -> KGraph:
    return load_fixture("g2")


@pytest.fixture
def g3() -> KGraph:
    return load_fixture("g3")


@pytest.fixture
def g4() -> KGraph:
    return load_fixture("g4")


@pytest.fixture
def g5() -> KGraph:
    return load_fixture("g5")


@pytest.fixture
def g1_edges():
    """v = (2,1) 주변의 e, f, g, h (eg = fh)"""
    return {
        "e": KGraphService.omega_edge(1, (2, 1)),
        "f": KGraphService.omega_edge(2, (2, 1)),
        "g": KGraphService.omega_edge(2, (3, 1)),
        "h": KGraphService.omega_edge(1, (2, 2)),
    }
