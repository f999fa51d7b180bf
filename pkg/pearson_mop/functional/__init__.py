"""행렬 범함수: 모멘트, Pearson 생성, 범함수 대수, Hankel 프로파일"""

from .pearson_spec import PearsonSpec
from .functional import (
    Functional, MomentSource, ExplicitMoments, PearsonGenerated, WeightOracle, DerivedMoments,
    from_moments, from_pearson, from_oracle, derived,
)
from .algebra import (
    moment, right_multiply, left_multiply, derivative, adjoint, change_of_variable,
    equivalence, congruence, normalize, bracket, inner, is_hermitian_functional,
    PearsonResidual, pearson_residual, spec_residual, moments_close, require_pearson,
)
from .hankel import HankelProfile, hankel_profile, delta

__all__ = [
    # 범함수와 모멘트 공급원
    "PearsonSpec", "Functional", "MomentSource", "ExplicitMoments", "PearsonGenerated",
    "WeightOracle", "DerivedMoments", "from_moments", "from_pearson", "from_oracle", "derived",
    # 범함수 대수
    "moment", "right_multiply", "left_multiply", "derivative", "adjoint", "change_of_variable",
    "equivalence", "congruence", "normalize", "bracket", "inner", "is_hermitian_functional",
    "PearsonResidual", "pearson_residual", "spec_residual", "moments_close", "require_pearson",
    # Hankel
    "HankelProfile", "hankel_profile", "delta",
]
