"""
Representation models
Boundary-path representation (sparse 0/1 matrices) and spanning elements
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple

from scipy.sparse import csr_matrix
from sympy import Expr, S, expand

from models.models import BoundaryPath, KGraph, Path


@dataclass(frozen=True)
class CKRep:
    """
    S_λ u_x = u_{λx} when s(λ) = r(x), else 0, on ℓ²(complete boundary paths).

    Matrices are integer csr matrices indexed by the position of a boundary path
    in `basis`; column x has at most one nonzero entry.
    """
    basis: Tuple[BoundaryPath, ...]
    matrices: Dict[Path, csr_matrix] = field(compare=False, hash=False)
    graph: KGraph = field(compare=False, hash=False)

    @property
    def size(self) -> int:
        return len(self.basis)

    def matrix(self, path: Path) -> csr_matrix:
        return self.matrices[path]

    @staticmethod
    def adjoint(matrix: csr_matrix) -> csr_matrix:
        # real 0/1 entries, so the adjoint is the transpose
        return matrix.transpose().tocsr()


@dataclass(frozen=True)
class SpanTerm:
    alpha: Path
    beta: Path
    coefficient: Expr


@dataclass(frozen=True)
class SpanElement:
    """Finite sum Σ c·s_α s_β*, s(α) = s(β); duplicate (α, β) merged, zeros dropped."""
    terms: Tuple[SpanTerm, ...]

    def __post_init__(self):
        merged: Dict[Tuple[Path, Path], Expr] = {}
        for term in self.terms:
            key = (term.alpha, term.beta)
            merged[key] = expand(merged.get(key, S.Zero) + term.coefficient)
        normalised = tuple(
            SpanTerm(alpha, beta, coefficient)
            for (alpha, beta), coefficient in sorted(merged.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))
            if coefficient != 0
        )
        object.__setattr__(self, "terms", normalised)

    def __len__(self) -> int:
        return len(self.terms)
