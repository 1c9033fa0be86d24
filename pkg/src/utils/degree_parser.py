"""
Degree Parser
명령행 인자 "3,2" → Degree, "a,b,c" → id 목록 변환
"""
from typing import List

import click

from core.exceptions import InvalidDegree
from models.models import Degree


def parse_degree(text: str) -> Degree:
    """
    쉼표로 구분된 자연수 → Degree
    예: "3,2" → Degree((3, 2))

    Raises:
        InvalidDegree: 자연수가 아닌 항목
    """
    parts = [part.strip() for part in text.split(",")]
    if not parts or any(not part.isdigit() for part in parts):
        raise InvalidDegree(f"degree must be comma-separated naturals, got {text!r}")
    return Degree(tuple(int(part) for part in parts))


def parse_id_list(text: str) -> List[str]:
    """쉼표로 구분된 id 목록 (빈 항목 제거)"""
    return [part.strip() for part in text.split(",") if part.strip()]


class DegreeParam(click.ParamType):
    name = "degree"

    def convert(self, value, param, ctx):
        if isinstance(value, Degree):
            return value
        try:
            return parse_degree(value)
        except InvalidDegree as e:
            self.fail(e.message, param, ctx)


class IdListParam(click.ParamType):
    name = "ids"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        return parse_id_list(value)


DEGREE = DegreeParam()
ID_LIST = IdListParam()
