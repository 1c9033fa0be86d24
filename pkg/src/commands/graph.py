"""
Graph commands
validate / squares / omega / compose / export-dot
"""
from collections import Counter
from pathlib import Path as FilePath
from typing import Optional

import click

from commands.common import EXIT_PROPERTY_FAILS, emit, handles_errors, load_graph
from core.logging_config import get_logger
from dto.reports import PathView
from models.models import Degree
from services.document_service import DocumentService
from services.kgraph_service import KGraphService
from services.path_service import PathService
from services.path_space_service import PathSpaceService
from utils.degree_parser import DEGREE, ID_LIST

logger = get_logger(__name__)


@click.command("validate")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@handles_errors
def validate(ctx: click.Context, file: str):
    """문서 검증: square table, 큐브 조건, local convexity"""
    g = load_graph(file)
    convex, witnesses = PathSpaceService.is_locally_convex(g)
    by_colour = Counter(edge.colour for edge in g.skeleton.edges)
    sources = PathSpaceService.source_report(g)

    lines = [
        f"valid {g.k}-graph: {len(g.vertices)} vertices, "
        + ", ".join(f"{by_colour[colour]} colour-{colour} edges" for colour in range(1, g.k + 1))
        + f", {len(g.squares)} squares",
        "locally convex" if convex else "not locally convex",
    ]
    lines += [
        f"  witness: vertex {w.vertex}, colours ({w.colour_i},{w.colour_j}), {w.lam} and {w.mu}"
        for w in witnesses
    ]
    lines += [f"  source in colours {colours}: {vertex}" for vertex, colours in sources.items()]

    data = {
        "k": g.k,
        "vertices": len(g.vertices),
        "edges_by_colour": {str(colour): by_colour[colour] for colour in range(1, g.k + 1)},
        "squares": len(g.squares),
        "locally_convex": convex,
        "witnesses": [w.model_dump() for w in witnesses],
        "sources": sources,
    }
    emit(ctx, convex, lines, data, 0 if convex else EXIT_PROPERTY_FAILS)


@click.command("squares")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--enumerate", "enumerate_", is_flag=True, help="스켈레톤의 모든 square table 열거")
@click.option("--write-dir", type=click.Path(file_okay=False), default=None, help="열거된 k-graph 문서 저장 폴더")
@click.pass_context
@handles_errors
def squares(ctx: click.Context, file: str, enumerate_: bool, write_dir: Optional[str]):
    """square table 검사 또는 열거"""
    skeleton, table = DocumentService.parse(FilePath(file).read_text(encoding="utf-8"))

    if not enumerate_:
        KGraphService.check_skeleton(skeleton)
        KGraphService.check_square_table(skeleton, table)
        violations = KGraphService.check_cube_condition(skeleton, table)
        lines = [f"{len(table)} squares, {len(violations)} cube violations"]
        lines += [f"  {v.triple}: {v.via_visible} != {v.via_hidden}" for v in violations]
        emit(ctx, not violations, lines, {"violations": [v.model_dump() for v in violations]},
             0 if not violations else EXIT_PROPERTY_FAILS)

    tables = KGraphService.enumerate_square_sets(skeleton)
    lines = [f"{len(tables)} square sets"]
    for n, found in enumerate(tables, start=1):
        lines.append(f"  #{n}: " + "; ".join(" ".join(square.as_list()) for square in found))

    if write_dir:
        target = FilePath(write_dir)
        target.mkdir(parents=True, exist_ok=True)
        stem = FilePath(file).name.split(".")[0]
        for n, found in enumerate(tables, start=1):
            g = KGraphService.validate(skeleton, found)
            (target / f"{stem}-{n}.kgraph").write_text(DocumentService.serialise(g), encoding="utf-8")
        logger.info(f"wrote {len(tables)} documents to {target}")

    data = {"count": len(tables), "tables": [[square.as_list() for square in found] for found in tables]}
    emit(ctx, bool(tables), lines, data, 0 if tables else EXIT_PROPERTY_FAILS)


@click.command("omega")
@click.argument("k", type=int)
@click.argument("m", type=DEGREE)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handles_errors
def omega(ctx: click.Context, k: int, m: Degree, output: Optional[str]):
    """Ω_{k,m} 문서 생성"""
    text = DocumentService.serialise(KGraphService.build_omega(k, m))
    if output:
        FilePath(output).write_text(text, encoding="utf-8")
        emit(ctx, True, [f"wrote {output}"], {"output": output})
    emit(ctx, True, [text.rstrip("\n")], {"document": text})


@click.command("compose")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--edges", type=ID_LIST, required=True, help="outermost-first 간선 목록 (예: e,g)")
@click.option("--spellings", is_flag=True, help="모든 spelling 출력")
@click.pass_context
@handles_errors
def compose(ctx: click.Context, file: str, edges, spellings: bool):
    """간선열을 normal form 경로로 합성"""
    g = load_graph(file)
    path = PathService.path_from_edges(g, edges)
    lines = [
        f"degree ({path.degree}) from {path.source_vertex} to {path.range_vertex}",
        "normal form: " + " | ".join(" ".join(block) for block in path.blocks),
    ]
    data = {"path": PathView.of(path).model_dump()}
    if spellings:
        words = PathService.edge_spellings(g, path)
        lines += [f"  {' '.join(word)}" for word in words]
        data["spellings"] = [list(word) for word in words]
    emit(ctx, True, lines, data)


@click.command("export-dot")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handles_errors
def export_dot(ctx: click.Context, file: str, output: Optional[str]):
    """Graphviz DOT 내보내기"""
    g = load_graph(file)
    text = DocumentService.export_dot(g, FilePath(file).name.split(".")[0])
    if output:
        FilePath(output).write_text(text, encoding="utf-8")
        emit(ctx, True, [f"wrote {output}"], {"output": output})
    emit(ctx, True, [text.rstrip("\n")], {"dot": text})
