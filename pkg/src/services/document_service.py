"""
Document Service
k-graph 문서 파싱/직렬화 (YAML) 및 DOT 내보내기 (Jinja2)
"""
from pathlib import Path as FilePath
from typing import Tuple

import yaml
from jinja2 import Environment, FileSystemLoader
from pydantic import ValidationError

from core.exceptions import DocumentSyntaxError, DuplicateId, UnknownEdgeId
from core.logging_config import get_logger
from dto.document import EdgeRecord, KGraphDocument
from models.models import Edge, KGraph, Skeleton, Square, SquareTable
from services.kgraph_service import KGraphService

logger = get_logger(__name__)

# templates 폴더 (src 폴더 기준 상위 폴더)
TEMPLATE_DIR = FilePath(__file__).parent.parent.parent / "templates"

EDGE_STYLES = [("solid", "black"), ("dashed", "red"), ("dotted", "blue"), ("bold", "darkgreen")]

_environment = Environment(loader=FileSystemLoader(str(TEMPLATE_DIR)), keep_trailing_newline=True)


class DocumentService:
    """문서 입출력 서비스"""

    @staticmethod
    def parse(text: str) -> Tuple[Skeleton, SquareTable]:
        """
        문서 텍스트 → (skeleton, square table)  (검증 전)

        Raises:
            DocumentSyntaxError: YAML 문법 오류 또는 스키마 불일치 (알 수 없는 필드 포함)
            DuplicateId, UnknownEdgeId
        """
        try:
            data = yaml.safe_load(text)
        except yaml.MarkedYAMLError as e:
            mark = e.problem_mark
            raise DocumentSyntaxError(
                e.problem or "malformed document",
                line=mark.line + 1 if mark else None,
                column=mark.column + 1 if mark else None,
            ) from e

        if not isinstance(data, dict):
            raise DocumentSyntaxError("document must be a mapping with fields k, vertices, edges, squares")

        try:
            document = KGraphDocument.model_validate(data)
        except ValidationError as e:
            error = e.errors()[0]
            location = ".".join(str(part) for part in error["loc"])
            mark = DocumentService._locate(text, error["loc"])
            raise DocumentSyntaxError(
                f"{location}: {error['msg']}", line=mark.line + 1, column=mark.column + 1,
            ) from e

        return DocumentService.from_document(document)

    @staticmethod
    def _locate(text: str, loc: Tuple) -> yaml.Mark:
        """
        pydantic 오류 위치(loc)를 YAML 노드의 시작 위치로 변환

        매핑의 마지막 단계는 키 노드를 가리킨다. 따라갈 수 없는 단계에서는
        그때까지 도달한 노드를 돌려준다 (누락된 필드 등).
        """
        node = yaml.compose(text, Loader=yaml.SafeLoader)
        mark = node.start_mark
        for part in loc:
            if isinstance(node, yaml.MappingNode):
                pair = next(((key, value) for key, value in node.value if key.value == str(part)), None)
                if pair is None:
                    break
                mark, node = pair[0].start_mark, pair[1]
            elif isinstance(node, yaml.SequenceNode) and isinstance(part, int) and part < len(node.value):
                node = node.value[part]
                mark = node.start_mark
            else:
                break
        return mark

    @staticmethod
    def from_document(document: KGraphDocument) -> Tuple[Skeleton, SquareTable]:
        if len(set(document.vertices)) != len(document.vertices):
            raise DuplicateId("duplicate vertex ids in document")
        edge_ids = [record.id for record in document.edges]
        if len(set(edge_ids)) != len(edge_ids):
            raise DuplicateId("duplicate edge ids in document")

        known = set(edge_ids)
        for record in document.squares:
            for edge_id in record:
                if edge_id not in known:
                    raise UnknownEdgeId(f"square {record} refers to unknown edge {edge_id!r}")

        skeleton = Skeleton(
            document.k,
            tuple(document.vertices),
            tuple(Edge(record.id, record.colour, record.source, record.range) for record in document.edges),
        )
        squares = SquareTable(tuple(Square(*record) for record in document.squares))
        return skeleton, squares

    @staticmethod
    def load(path: FilePath) -> KGraph:
        """파일을 읽고 검증까지 수행"""
        skeleton, squares = DocumentService.parse(FilePath(path).read_text(encoding="utf-8"))
        return KGraphService.validate(skeleton, squares)

    @staticmethod
    def to_document(g: KGraph) -> KGraphDocument:
        return KGraphDocument(
            k=g.k,
            vertices=list(g.vertices),
            edges=[
                EdgeRecord(id=edge.id, colour=edge.colour, source=edge.source, range=edge.range)
                for edge in g.skeleton.edges
            ],
            squares=[square.as_list() for square in g.squares],
        )

    @staticmethod
    def serialise(g: KGraph) -> str:
        """정규형 문서 텍스트 (키 정렬, vertex/edge/square 정렬)"""
        return yaml.safe_dump(
            DocumentService.to_document(g).model_dump(),
            sort_keys=True,
            default_flow_style=None,
            allow_unicode=True,
        )

    @staticmethod
    def export_dot(g: KGraph, name: str = "kgraph") -> str:
        """Graphviz DOT (간선은 source → range, 색마다 선 스타일)"""
        edges = []
        for edge in g.skeleton.edges:
            style, color = EDGE_STYLES[(edge.colour - 1) % len(EDGE_STYLES)]
            edges.append({
                "id": edge.id,
                "source": edge.source,
                "range": edge.range,
                "colour": edge.colour,
                "style": style,
                "color": color,
            })
        template = _environment.get_template("kgraph.dot.j2")
        return template.render(name=name, vertices=g.vertices, edges=edges)
