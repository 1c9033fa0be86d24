"""
Core 모듈
환경 설정, 로깅 초기화, 예외 계층
"""
from core.properties import settings
from core.logging_config import setup_logging, get_logger
from core.exceptions import KGraphError

__all__ = [
    "settings",
    "setup_logging",
    "get_logger",
    "KGraphError",
]
