"""모닉 MOP 구간, 점화식, 도함수 구간과 사다리 관계"""

from .segment import (
    MonicSegment, compute_segment, recurrence_coefficients, recurrence_residuals,
    favard_roundtrip, quasi_orthogonality_order, shifted_bracket,
)
from .derivatives import (
    DerivativeSegment, derivative_segment, LadderCoefficients, ladder_coefficients,
    ladder_relations, FittedLadder, fit_ladder,
)

__all__ = [
    # 구간과 점화식
    "MonicSegment", "compute_segment", "recurrence_coefficients", "recurrence_residuals",
    "favard_roundtrip", "quasi_orthogonality_order", "shifted_bracket",
    # 도함수와 사다리
    "DerivativeSegment", "derivative_segment", "LadderCoefficients", "ladder_coefficients",
    "ladder_relations", "FittedLadder", "fit_ladder",
]
