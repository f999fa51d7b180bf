"""pearson_mop 환경변수 설정 모듈

수치 허용오차, 인증 지평(horizon), 로깅과 명세 파일 경로를 중앙에서 관리합니다.
단일 책임 원칙: 환경변수 설정 관리만 담당
개방-폐쇄 원칙: 새로운 설정 추가 시 기존 코드 수정 없이 확장 가능
"""

import os
from pathlib import Path
from typing import Optional
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class PearsonMopSettings(BaseSettings):
    """pearson_mop 환경변수 설정 클래스

    Pydantic BaseSettings 로 `MOP_` 접두사 환경변수와 .env 파일을 읽습니다.
    모든 허용오차 기본값은 이 클래스를 통해 접근해야 합니다.
    """

    model_config = SettingsConfigDict(
        env_prefix="MOP_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # 수치 허용오차
    tol_rel: float = Field(default=1e-9, gt=0.0, description="상대 허용오차")
    tol_abs: float = Field(default=1e-12, gt=0.0, description="절대 허용오차 하한")
    tol_cond_max: float = Field(default=1e10, gt=1.0, description="신뢰 가능한 풀이의 조건수 상한")
    tol_zero_rel: float = Field(default=1e-8, gt=0.0, description="상쇄된 브래킷을 0으로 판정하는 상대 임계값")
    null_rtol: float = Field(default=1e-10, gt=0.0, description="영공간 판정용 상대 특이값 임계값")

    # 검증 지평
    test_horizon_pad: int = Field(default=4, ge=0, description="N_test = 2N + pad")
    cert_factor: int = Field(default=2, ge=1, description="N_cert = cert_factor·m·(p+q+3)")
    quad_epsrel: float = Field(default=1e-12, gt=0.0, description="적응 구적 상대 허용오차")
    verify_rtol: float = Field(default=1e-8, gt=0.0, description="CLI 검증 판정의 상대 잔차 임계값")

    # 로깅/파일
    log_level: str = Field(default="INFO", description="로그 레벨")
    report_log_path: str = Field(default="logs/pearson_mop_reports.log", description="JSON 리포트 로그 파일")
    specs_config: str = Field(default="./functional_specs.json", description="이름 붙은 범함수 명세 파일 경로")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """로그 레벨 검증"""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"지원하지 않는 로그 레벨입니다: {v}")
        return level

    @field_validator("specs_config")
    @classmethod
    def validate_specs_config_path(cls, v: str) -> str:
        """명세 파일 경로를 절대 경로로 변환"""
        if not os.path.isabs(v):
            v = os.path.abspath(v)
        return v

    def get_specs_config_path(self) -> str:
        """이름 붙은 명세 파일 경로 반환"""
        return self.specs_config

    def validate_specs_config_file(self) -> bool:
        """명세 파일이 존재하는 JSON 파일인지 확인"""
        try:
            path = Path(self.specs_config)
            return path.exists() and path.is_file() and path.suffix == ".json"
        except OSError:
            return False

    def test_horizon(self, degree: int) -> int:
        """차수 N 계산에 쓰이는 '모든 n' 항등식 검증 지평"""
        return 2 * degree + self.test_horizon_pad

    def cert_horizon(self, dim: int, p: int, q: int) -> int:
        """모듈 기저 인증에 쓰이는 방정식 개수"""
        return self.cert_factor * dim * (p + q + 3)


@lru_cache()
def get_settings() -> PearsonMopSettings:
    """설정 싱글톤 반환

    Raises:
        ValueError: 환경변수 값이 잘못된 경우
    """
    try:
        return PearsonMopSettings()
    except Exception as e:
        raise ValueError(f"환경변수 설정 로드 실패: {e}")


def reload_settings() -> PearsonMopSettings:
    """캐시를 비우고 설정을 다시 로드합니다 (테스트용)"""
    get_settings.cache_clear()
    return get_settings()


def get_specs_config_path() -> str:
    """명세 파일 경로 편의 함수"""
    return get_settings().get_specs_config_path()


def validate_specs_config_path(config_path: Optional[str] = None) -> bool:
    """명세 파일 경로 유효성 편의 함수

    Args:
        config_path: 확인할 경로 (None 이면 현재 설정 사용)
    """
    if config_path is None:
        return get_settings().validate_specs_config_file()
    try:
        path = Path(config_path)
        return path.exists() and path.is_file() and path.suffix == ".json"
    except OSError:
        return False
