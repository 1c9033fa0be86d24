"""
환경별 설정 관리
Settings for the workbench, split by environment (local runs vs CI)
"""
import os
from enum import Enum

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

# .env 파일 로드
load_dotenv()


class Environment(Enum):
    """환경 구분"""
    LOCAL = "local"
    CI = "ci"


class Config(BaseSettings):
    """공통 설정"""
    model_config = SettingsConfigDict(env_prefix="KGRAPH_", env_file=".env", extra="ignore")

    APP_NAME: str = "kgraph-workbench"
    APP_VERSION: str = "1.0.0"

    # Logging
    LOG_CONFIG_PATH: str = "logging.yaml"
    LOG_LEVEL: str = "INFO"

    # Guards
    MAX_LATTICE_VERTICES: int = 20
    MAX_SQUARE_SETS: int = 100_000
    MAX_GRID_POINTS: int = 20_000

    # Output
    JSON_SCHEMA: str = "kgraph-workbench/1"


class LocalConfig(Config):
    """로컬 실행 환경 설정"""
    ENV: Environment = Environment.LOCAL


class CIConfig(Config):
    """CI 환경 설정 (로그 최소화)"""
    ENV: Environment = Environment.CI
    LOG_LEVEL: str = "WARNING"


def get_settings() -> Config:
    """
    환경에 따라 적절한 설정 반환
    APP_ENV 환경변수로 제어
    """
    env = os.getenv("APP_ENV", "local").lower()

    if env == "ci":
        return CIConfig()
    return LocalConfig()


# 전역 설정 객체
settings = get_settings()
