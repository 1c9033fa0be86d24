"""
Algebra commands
ck-verify / forced-zeros / core
"""
from typing import Optional

import click

from commands.common import EXIT_PROPERTY_FAILS, emit, handles_errors, load_graph
from dto.reports import PathView
from models.models import Degree
from services.kgraph_service import KGraphService
from services.representation_service import RepresentationService
from utils.degree_parser import DEGREE


@click.command("ck-verify")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--cap", type=DEGREE, default=None, help="기본값: 경로 degree 상한")
@click.pass_context
@handles_errors
def ck_verify(ctx: click.Context, file: str, cap: Optional[Degree]):
    """경계 경로 표현에서 Cuntz-Krieger 관계식 검증"""
    g = load_graph(file)
    rep = RepresentationService.build_rep(g)
    cap = cap or KGraphService.max_degree(g)

    violations = RepresentationService.verify_ck_relations(rep, cap)
    spanning = RepresentationService.verify_spanning_formula(rep, cap)
    equivalent = RepresentationService.verify_edge_level_equivalence(rep, cap)
    dimension = RepresentationService.span_dimension(rep)

    ok = not violations and not spanning and equivalent
    lines = [
        f"boundary path representation on {rep.size} basis vectors",
        "relations (1)-(4) verified" if not violations else f"{len(violations)} relation violations",
        "spanning formula verified" if not spanning else f"{len(spanning)} spanning formula violations",
        "edge-level relations agree with (4)" if equivalent else "edge-level relations disagree with (4)",
        f"span dimension {dimension}",
    ]
    lines += [f"  ({v.relation}) {v.subject}: {v.detail}" for v in violations + spanning]

    data = {
        "basis_size": rep.size,
        "cap": list(cap.entries),
        "violations": [v.model_dump() for v in violations + spanning],
        "edge_level_equivalent": equivalent,
        "span_dimension": dimension,
    }
    emit(ctx, ok, lines, data, 0 if ok else EXIT_PROPERTY_FAILS)


@click.command("forced-zeros")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@handles_errors
def forced_zeros(ctx: click.Context, file: str):
    """모든 CK family 에서 0이 되는 생성자"""
    g = load_graph(file)
    generators = RepresentationService.forced_zero_generators(g)
    names = [str(path) for path in generators]
    lines = ["no forced zeros"] if not generators else [f"forced zeros: {', '.join(names)}"]
    emit(ctx, not generators, lines, {"generators": [PathView.of(path).model_dump() for path in generators]},
         0 if not generators else EXIT_PROPERTY_FAILS)


@click.command("core")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--q", "q", type=DEGREE, required=True)
@click.pass_context
@handles_errors
def core(ctx: click.Context, file: str, q: Degree):
    """F_q 블록 구조"""
    g = load_graph(file)
    report = RepresentationService.core_report(g, q)
    lines = [f"F_({q}): {len(report.blocks)} blocks, total dimension {report.total_dimension}"]
    lines += [f"  ({','.join(map(str, b.degree))}) {b.vertex}: M_{b.dimension}" for b in report.blocks]
    emit(ctx, True, lines, report.model_dump())
