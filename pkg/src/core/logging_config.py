"""
로깅 설정
stdout 은 명령 결과 전용이므로 모든 로그는 stderr 로 보낸다
"""
import logging
import logging.config
from pathlib import Path
from typing import Optional

import yaml

from core.properties import settings

FALLBACK_FORMAT = '%(levelname)s >> [%(name)s] %(message)s'

# 프로젝트 루트 (src 의 상위)
PROJECT_ROOT = Path(__file__).resolve().parents[2]


def setup_logging(level: Optional[str] = None) -> None:
    """
    logging.yaml 로 로거를 구성한다.
    level 이 주어지면 root 레벨만 덮어쓴다 (--log-level).
    """
    root_level = level or settings.LOG_LEVEL
    config_path = PROJECT_ROOT / settings.LOG_CONFIG_PATH

    if not config_path.exists():
        logging.basicConfig(level=root_level, format=FALLBACK_FORMAT)
        logging.getLogger(__name__).debug(f"no logging config at {config_path}, using basicConfig")
        return

    config = yaml.safe_load(config_path.read_text(encoding='utf-8'))
    config.setdefault("root", {})["level"] = root_level
    logging.config.dictConfig(config)


def get_logger(name: str) -> logging.Logger:
    """모듈별 로거 (보통 __name__)"""
    return logging.getLogger(name)
