"""
Path commands
paths / le-paths / boundary / condition-b
"""
from typing import Optional

import click

from commands.common import EXIT_PROPERTY_FAILS, emit, handles_errors, load_graph
from dto.reports import BoundaryPathView, ConditionBStatus, PathView
from models.models import Degree
from services.boundary_service import BoundaryService
from services.path_space_service import PathSpaceService
from utils.degree_parser import DEGREE


def _path_lines(paths):
    return [f"  {path}  (source {path.source_vertex}, degree {path.degree})" for path in paths]


@click.command("paths")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--vertex", required=True)
@click.option("--degree", type=DEGREE, required=True)
@click.pass_context
@handles_errors
def paths(ctx: click.Context, file: str, vertex: str, degree: Degree):
    """Λ^m(v)"""
    g = load_graph(file)
    found = PathSpaceService.paths_of_degree(g, vertex, degree)
    lines = [f"{len(found)} paths of degree ({degree}) into {vertex}"] + _path_lines(found)
    emit(ctx, True, lines, {"paths": [PathView.of(path).model_dump() for path in found]})


@click.command("le-paths")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--vertex", required=True)
@click.option("--cap", "--degree", "cap", type=DEGREE, required=True)
@click.pass_context
@handles_errors
def le_paths(ctx: click.Context, file: str, vertex: str, cap: Degree):
    """Λ^≤q(v)"""
    g = load_graph(file)
    found = PathSpaceService.le_paths(g, vertex, cap)
    lines = [f"{len(found)} paths in Λ^≤({cap})({vertex})"] + _path_lines(found)
    emit(ctx, True, lines, {"paths": [PathView.of(path).model_dump() for path in found]})


@click.command("boundary")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--vertex", required=True)
@click.option("--cap", type=DEGREE, required=True)
@click.pass_context
@handles_errors
def boundary(ctx: click.Context, file: str, vertex: str, cap: Degree):
    """r(x) = v 인 경계 경로 (d ≤ cap)"""
    g = load_graph(file)
    found = BoundaryService.boundary_paths(g, vertex, cap)
    lines = [f"{len(found)} boundary paths at {vertex} up to ({cap})"]
    lines += [
        f"  {x.prefix}  degree ({x.prefix.degree}) {'complete' if x.complete else 'truncated'}"
        for x in found
    ]
    emit(ctx, True, lines, {"boundary_paths": [BoundaryPathView.of(x).model_dump() for x in found]})


@click.command("condition-b")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--depth", type=DEGREE, required=True)
@click.option("--vertex", default=None, help="지정하지 않으면 모든 vertex")
@click.pass_context
@handles_errors
def condition_b(ctx: click.Context, file: str, depth: Degree, vertex: Optional[str]):
    """condition (B) 판정"""
    g = load_graph(file)
    vertices = [vertex] if vertex else list(g.vertices)
    verdicts = [BoundaryService.condition_b_check(g, v, depth) for v in vertices]

    lines = []
    for verdict in verdicts:
        line = f"{verdict.vertex}: {verdict.status.value}"
        if verdict.witness:
            line += f" (witness {' '.join(verdict.witness.prefix.edges) or verdict.vertex})"
        if verdict.failing_pair:
            line += f" (failing pair {' '.join(verdict.failing_pair[0])} / {' '.join(verdict.failing_pair[1])})"
        lines.append(line)

    ok = all(verdict.status != ConditionBStatus.REFUTED_TO_DEPTH for verdict in verdicts)
    emit(ctx, ok, lines, {"verdicts": [verdict.model_dump(mode="json") for verdict in verdicts]},
         0 if ok else EXIT_PROPERTY_FAILS)
