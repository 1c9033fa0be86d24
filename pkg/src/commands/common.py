"""
명령 공통 처리
출력 (텍스트 / --json), 예외 → 종료 코드 변환, 문서 로드
"""
from functools import wraps
from typing import Any, Dict, Iterable, Optional

import click

from core.exceptions import KGraphError
from core.logging_config import get_logger
from dto.responses import CommandResponse
from models.models import KGraph
from services.document_service import DocumentService

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_GUARD_EXCEEDED = 3


def wants_json(ctx: click.Context) -> bool:
    return bool((ctx.find_root().obj or {}).get("json"))


def emit(ctx: click.Context, ok: bool, lines: Iterable[str], data: Optional[Dict[str, Any]] = None, exit_code: int = EXIT_OK):
    """결과 출력 후 exit_code 로 종료"""
    if wants_json(ctx):
        click.echo(CommandResponse(command=ctx.info_name, ok=ok, exit_code=exit_code, data=data or {}).to_json())
    else:
        for line in lines:
            click.echo(line)
    ctx.exit(exit_code)


def handles_errors(command):
    """KGraphError → 오류 출력 + exit_code"""

    @wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except KGraphError as e:
            logger.debug(f"{ctx.info_name}: {type(e).__name__}: {e.message}")
            if wants_json(ctx):
                click.echo(CommandResponse(
                    command=ctx.info_name,
                    ok=False,
                    exit_code=e.exit_code,
                    data=e.detail,
                    error=type(e).__name__,
                    message=e.message,
                ).to_json())
            else:
                click.echo(f"error: {type(e).__name__}: {e.message}", err=True)
            ctx.exit(e.exit_code)

    return wrapper


def load_graph(path: str) -> KGraph:
    return DocumentService.load(path)
