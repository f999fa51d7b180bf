"""밀집 복소 행렬/행렬 다항식 연산"""

from .matrices import (
    CMatrix, Tolerance, resolve_tol, as_cmatrix, adjoint, norm, commutator, commutes,
    is_hermitian, is_diagonal, offdiag_norm, condition, is_nonsingular, solve_right,
    solve_left, psd_check, simultaneous_unitary_diagonalizer, cholesky_lower,
)
from .polynomials import MatrixPolynomial, poly_mul, poly_det_adj, scalar_poly, stack_polys
from .blocks import block_hankel, solve_block_row, scaled_condition, split_block_row, join_block_row
from .nullspace import NullspaceResult, equilibrated_nullspace

__all__ = [
    # 행렬 술어
    "CMatrix", "Tolerance", "resolve_tol", "as_cmatrix", "adjoint", "norm", "commutator",
    "commutes", "is_hermitian", "is_diagonal", "offdiag_norm", "condition", "is_nonsingular",
    "solve_right", "solve_left", "psd_check", "simultaneous_unitary_diagonalizer",
    "cholesky_lower",
    # 행렬 다항식
    "MatrixPolynomial", "poly_mul", "poly_det_adj", "scalar_poly", "stack_polys",
    # 블록 선형계와 영공간
    "block_hankel", "solve_block_row", "scaled_condition", "split_block_row", "join_block_row",
    "NullspaceResult", "equilibrated_nullspace",
]
