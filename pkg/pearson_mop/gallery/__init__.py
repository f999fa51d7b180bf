"""이름 붙은 예제 범함수와 가중치 적분 모멘트 오라클"""

from .oracles import (
    gaussian_moments, gamma_moments, gamma_log_moments, jacobi_moments, jacobi_log_moments,
    CircleParams, pochhammer, circle_bessel_moments, matrix_family_mu0,
)
from .weights import (
    ScalarWeight, GaussianWeight, GammaWeight, JacobiWeight, CircleWeight,
    WeightTerm, MatrixWeight, entrywise,
)
from .entries import GalleryEntry, build, list_entries, parse_param, register
from .structure import StructureCheck, structure_check

__all__ = [
    # 모멘트 오라클
    "gaussian_moments", "gamma_moments", "gamma_log_moments", "jacobi_moments",
    "jacobi_log_moments", "CircleParams", "pochhammer", "circle_bessel_moments",
    "matrix_family_mu0",
    # 가중치
    "ScalarWeight", "GaussianWeight", "GammaWeight", "JacobiWeight", "CircleWeight",
    "WeightTerm", "MatrixWeight", "entrywise",
    # 예제
    "GalleryEntry", "build", "list_entries", "parse_param", "register",
    "StructureCheck", "structure_check",
]
