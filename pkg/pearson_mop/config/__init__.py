"""pearson_mop 설정 패키지

환경변수 설정과 JSON 범함수 명세 관련 모듈들을 포함합니다.
"""

# 환경변수 설정 모듈
from .env_config import (
    PearsonMopSettings,
    get_settings,
    reload_settings,
    get_specs_config_path,
    validate_specs_config_path
)

# 범함수 명세 모듈
from .spec_config import (
    FunctionalSpecModel,
    ResolvedSpec,
    SpecReader,
    JSONSpecReader,
    SpecManager,
    build_functional,
    create_spec_manager,
    parse_matrix,
    parse_polynomial,
    parse_shorthand
)

__all__ = [
    # 환경변수 설정
    "PearsonMopSettings",
    "get_settings",
    "reload_settings",
    "get_specs_config_path",
    "validate_specs_config_path",
    # 범함수 명세
    "FunctionalSpecModel",
    "ResolvedSpec",
    "SpecReader",
    "JSONSpecReader",
    "SpecManager",
    "build_functional",
    "create_spec_manager",
    "parse_matrix",
    "parse_polynomial",
    "parse_shorthand"
]
