"""Pearson 형 방정식 분석: 가군 기저, 스칼라 아이디얼, 순환성, 틸드 사슬"""

from .module_basis import ModuleBasis, module_basis, cyclicity_check, column_system, det_is_zero
from .ideal import ClassReport, scalar_ideal, seed_from_pearson, class_of
from .chain import TildeResult, tilde_pearson, ChainLink, DerivativeChain, derivative_chain

__all__ = [
    # 가군 기저와 순환성
    "ModuleBasis", "module_basis", "cyclicity_check", "column_system", "det_is_zero",
    # 스칼라 아이디얼과 class
    "ClassReport", "scalar_ideal", "seed_from_pearson", "class_of",
    # 틸드 쌍과 도함수 사슬
    "TildeResult", "tilde_pearson", "ChainLink", "DerivativeChain", "derivative_chain",
]
