"""
Ideal commands
ideals / quotient / restrict
"""
from pathlib import Path as FilePath
from typing import Optional

import click

from commands.common import EXIT_PROPERTY_FAILS, emit, handles_errors, load_graph
from dto.reports import ConditionBStatus
from models.models import Degree
from services.boundary_service import BoundaryService
from services.document_service import DocumentService
from services.ideal_service import IdealService
from utils.degree_parser import DEGREE, ID_LIST


def _braces(members) -> str:
    return "{" + ", ".join(sorted(members)) + "}"


@click.command("ideals")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--list", "list_", is_flag=True, help="saturated hereditary 집합 나열")
@click.option("--condition-b", "depth", type=DEGREE, default=None, help="condition (B) 를 이 깊이까지 함께 판정")
@click.pass_context
@handles_errors
def ideals(ctx: click.Context, file: str, list_: bool, depth: Optional[Degree]):
    """gauge-invariant ideal 격자 (saturated hereditary 집합)"""
    g = load_graph(file)
    lattice = IdealService.enumerate_sat_hered(g)

    lines = [f"{len(lattice)} saturated hereditary sets"]
    if list_:
        lines += [f"  {_braces(element.members)}" for element in lattice.elements]
        lines += [f"  {_braces(lower.members)} < {_braces(upper.members)}" for lower, upper in lattice.covers()]

    data = {
        "sets": [element.sorted_members() for element in lattice.elements],
        "covers": [[lower.sorted_members(), upper.sorted_members()] for lower, upper in lattice.covers()],
    }
    ok = True
    if depth is not None:
        # 모든 quotient 에서 condition (B) 가 성립해야 ideal 이 모두 gauge-invariant
        checks = []
        for element in lattice.elements:
            quotient_g = IdealService.quotient_graph(g, element.members)
            verdicts = [BoundaryService.condition_b_check(quotient_g, vertex, depth) for vertex in quotient_g.vertices]
            refuted = [verdict.vertex for verdict in verdicts if verdict.status == ConditionBStatus.REFUTED_TO_DEPTH]
            if refuted:
                ok = False
                lines.append(f"  quotient by {_braces(element.members)}: condition (B) refuted at {', '.join(refuted)}")
            checks.append({
                "set": element.sorted_members(),
                "verdicts": [verdict.model_dump(mode="json") for verdict in verdicts],
            })
        lines.append(
            "condition (B) holds on every quotient: the list is every gauge-invariant ideal and every ideal"
            if ok else "condition (B) fails on some quotient: ideals beyond this list may exist"
        )
        data["condition_b"] = checks

    emit(ctx, ok, lines, data, 0 if ok else EXIT_PROPERTY_FAILS)


def _write_graph(ctx: click.Context, g, output: Optional[str]):
    text = DocumentService.serialise(g)
    if output:
        FilePath(output).write_text(text, encoding="utf-8")
        emit(ctx, True, [f"wrote {output}"], {"output": output})
    emit(ctx, True, [text.rstrip("\n")], {"document": text})


@click.command("quotient")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--set", "members", type=ID_LIST, required=True, help="saturated hereditary vertex 집합 (예: a,b)")
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handles_errors
def quotient(ctx: click.Context, file: str, members, output: Optional[str]):
    """Λ \\ ΛH"""
    _write_graph(ctx, IdealService.quotient_graph(load_graph(file), members), output)


@click.command("restrict")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--set", "members", type=ID_LIST, required=True, help="hereditary vertex 집합")
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
@handles_errors
def restrict(ctx: click.Context, file: str, members, output: Optional[str]):
    """ΛH"""
    _write_graph(ctx, IdealService.restriction_graph(load_graph(file), members), output)
