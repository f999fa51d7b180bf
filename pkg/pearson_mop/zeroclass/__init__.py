"""영류 D(uαI) = uΨ: 사다리, 닫힌 형태, 존재 판정, 표준형, 미분방정식, 에르미트 분석"""

from .spec import ZeroClassSpec, Ladders
from .closed_forms import (
    closed_form_E, closed_form_pi, closed_form_ratios, shifted_E0, existence_check,
    ClosedFormComparison, compare_with_segment,
)
from .canonical import (
    CanonicalType, CanonicalConditions, CANONICAL_ALPHA, canonical_type, canonical_reduction,
    canonical_existence_conditions, is_canonical,
)
from .ode import (
    OdeTriple, ZeroClassOde, kappa, right_ode, ode_coefficients, ode_solve,
    StructureRelation, structure_relation, SigmaConsistency, sigma_consistency,
)
from .hermitian import (
    alpha_reality, hermiticity_obstruction, commutator_obstruction, diagonalizability_report,
    bessel_positivity_guard,
)

__all__ = [
    # 명세와 사다리
    "ZeroClassSpec", "Ladders",
    # 닫힌 형태와 존재
    "closed_form_E", "closed_form_pi", "closed_form_ratios", "shifted_E0", "existence_check",
    "ClosedFormComparison", "compare_with_segment",
    # 표준형
    "CanonicalType", "CanonicalConditions", "CANONICAL_ALPHA", "canonical_type",
    "canonical_reduction", "canonical_existence_conditions", "is_canonical",
    # 미분방정식과 구조 관계
    "OdeTriple", "ZeroClassOde", "kappa", "right_ode", "ode_coefficients", "ode_solve",
    "StructureRelation", "structure_relation", "SigmaConsistency", "sigma_consistency",
    # 에르미트 영류
    "alpha_reality", "hermiticity_obstruction", "commutator_obstruction",
    "diagonalizability_report", "bessel_positivity_guard",
]
