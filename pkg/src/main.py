"""
kgraph-workbench - Command Line Application
higher-rank graph 검증 및 Cuntz-Krieger 구조 계산 도구
"""
from typing import Optional

import click

from commands import ALL_COMMANDS
from core.logging_config import get_logger, setup_logging
from core.properties import settings

logger = get_logger(__name__)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--json", "as_json", is_flag=True, help=f"JSON 출력 (schema {settings.JSON_SCHEMA})")
@click.option("--log-level", default=None, help="로그 레벨 (기본값: 설정의 LOG_LEVEL)")
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
@click.pass_context
def cli(ctx: click.Context, as_json: bool, log_level: Optional[str]):
    """k-graph 문서를 검증하고 경로 공간, 경계 경로 표현, ideal 구조를 계산한다."""
    setup_logging(log_level.upper() if log_level else None)
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json
    logger.debug(f"{settings.APP_NAME} v{settings.APP_VERSION} ({settings.ENV.value})")


# 명령 등록
for command in ALL_COMMANDS:
    cli.add_command(command)


if __name__ == "__main__":
    cli()
