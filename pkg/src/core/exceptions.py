"""
예외 정의
Every failure carries the process exit code the command line reports for it
"""
from typing import Optional


class KGraphError(Exception):
    """Base error; exit code 2 (input error) unless a subclass says otherwise."""
    exit_code: int = 2

    def __init__(self, message: str, *, detail: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}


# ============================================================
# 입력 오류 (exit 2)
# ============================================================

class DocumentSyntaxError(KGraphError):
    """Malformed document text; carries the 1-based line/column when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}", detail={"line": line, "column": column})
        self.line = line
        self.column = column


class UnknownEdgeId(KGraphError):
    pass


class UnknownVertex(KGraphError):
    pass


class ColourOutOfRange(KGraphError):
    pass


class DuplicateId(KGraphError):
    pass


class InvalidDegree(KGraphError):
    pass


class InvalidSkeleton(KGraphError):
    pass


# ============================================================
# 구조 오류 (exit 2)
# ============================================================

class SquareTableError(KGraphError):
    pass


class MissingSquare(SquareTableError):
    pass


class DuplicateSquare(SquareTableError):
    pass


class EndpointMismatch(SquareTableError):
    pass


class CubeViolation(SquareTableError):
    pass


class NotComposable(KGraphError):
    pass


class DegreeMismatch(KGraphError):
    pass


class PreconditionViolated(KGraphError):
    pass


class NotHereditary(KGraphError):
    pass


class NotSaturated(KGraphError):
    pass


# ============================================================
# 성질 불만족 (exit 1) / 가드 초과 (exit 3)
# ============================================================

class NotLocallyConvex(KGraphError):
    exit_code = 1


class TooLarge(KGraphError):
    exit_code = 3


class InfiniteBoundary(KGraphError):
    exit_code = 3
