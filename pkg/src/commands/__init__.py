"""
Commands 모듈
click 명령 정의
"""
from commands.graph import validate, squares, omega, compose, export_dot
from commands.paths import paths, le_paths, boundary, condition_b
from commands.algebra import ck_verify, forced_zeros, core
from commands.ideals import ideals, quotient, restrict

ALL_COMMANDS = [
    validate,
    squares,
    omega,
    compose,
    export_dot,
    paths,
    le_paths,
    boundary,
    condition_b,
    ck_verify,
    forced_zeros,
    core,
    ideals,
    quotient,
    restrict,
]

__all__ = ["ALL_COMMANDS"]
