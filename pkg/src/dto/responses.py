"""
Response DTO
명령 출력 (--json) 스키마
"""
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field

from core.properties import settings


class CommandResponse(BaseModel):
    """모든 명령의 JSON 출력"""
    schema_: str = Field(default=settings.JSON_SCHEMA, alias="schema")
    command: str
    ok: bool
    exit_code: int = 0
    data: Dict[str, Any] = {}
    error: Optional[str] = None
    message: Optional[str] = None

    model_config = {"populate_by_name": True}

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
