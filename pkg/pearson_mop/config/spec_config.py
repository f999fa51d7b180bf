"""JSON 범함수 명세 관리 모듈

CLI 가 받는 범함수 명세(인라인 JSON, 파일, 이름 붙은 명세, 갤러리 참조)를
검증하고 Functional 로 바꾸는 클래스들을 제공합니다.
SOLID 원칙을 따라 단일 책임 원칙과 의존성 역전 원칙을 적용했습니다.
"""

import json
import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from ..errors import PearsonMopError, SpecParseError
from ..functional import Functional, PearsonSpec, from_moments, from_pearson
from ..linalg import MatrixPolynomial, Tolerance

logger = logging.getLogger(__name__)

_NUMBER = (int, float)


def _is_number(v: Any) -> bool:
    return isinstance(v, _NUMBER) and not isinstance(v, bool)


def _is_pair(v: Any) -> bool:
    return isinstance(v, list) and len(v) == 2 and all(_is_number(x) for x in v)


def _entry(v: Any) -> complex:
    """행렬 성분: 수 또는 [re, im]"""
    if _is_number(v):
        return complex(v)
    if _is_pair(v):
        return complex(v[0], v[1])
    raise SpecParseError(f"행렬 성분은 수 또는 [re, im] 이어야 합니다: {v!r}")


def parse_matrix(value: Any, dim: int) -> np.ndarray:
    """m×m 행렬 파싱 (수는 스칼라×I, m = 1 이면 [x], [[x]], [re, im] 도 허용)"""
    eye = np.eye(dim, dtype=complex)
    if _is_number(value):
        return complex(value) * eye
    if dim == 1 and _is_pair(value):
        return _entry(value) * eye
    if not isinstance(value, list) or len(value) != dim:
        raise SpecParseError(f"{dim}×{dim} 행렬이 아닙니다: {value!r}")
    rows = []
    for row in value:
        if dim == 1 and not (isinstance(row, list) and len(row) == 1):
            row = [row]
        if not isinstance(row, list) or len(row) != dim:
            raise SpecParseError(f"행의 길이가 {dim} 이 아닙니다: {row!r}")
        rows.append([_entry(x) for x in row])
    return np.array(rows, dtype=complex)


_TERM = re.compile(r"^(?P<coef>[0-9]*\.?[0-9]*)\*?(?P<x>x(?:\^(?P<pow>[0-9]+))?)?$")


def parse_shorthand(text: str) -> List[complex]:
    """스칼라 다항식 약식 표기 "-2x", "1-x^2", "3 + 0.5x" 의 계수 (c_0, c_1, …)"""
    compact = text.replace(" ", "")
    if not compact:
        raise SpecParseError("빈 다항식 표기입니다")
    tokens = re.findall(r"([+-]?)([^+-]+)", compact)
    if "".join(s + b for s, b in tokens) != compact:
        raise SpecParseError(f"다항식 표기를 해석할 수 없습니다: {text!r}")
    coeffs: Dict[int, float] = {}
    for sign, body in tokens:
        match = _TERM.match(body)
        if match is None or match.group("coef") == "." or not (match.group("coef") or match.group("x")):
            raise SpecParseError(f"다항식 항을 해석할 수 없습니다: {body!r} ({text!r})")
        coef = float(match.group("coef")) if match.group("coef") else 1.0
        power = 0 if not match.group("x") else int(match.group("pow") or 1)
        coeffs[power] = coeffs.get(power, 0.0) + (-coef if sign == "-" else coef)
    return [complex(coeffs.get(k, 0.0)) for k in range(max(coeffs) + 1)]


def parse_polynomial(value: Any, dim: int) -> MatrixPolynomial:
    """계수 행렬 목록, 스칼라, 또는 (m = 1) 약식 문자열"""
    if isinstance(value, str):
        if dim != 1:
            raise SpecParseError("약식 다항식 표기는 dim = 1 에서만 허용됩니다")
        return MatrixPolynomial.from_scalar(parse_shorthand(value), dim=1)
    if _is_number(value):
        return MatrixPolynomial.constant(parse_matrix(value, dim))
    if not isinstance(value, list) or not value:
        raise SpecParseError(f"다항식은 계수 목록이어야 합니다: {value!r}")
    return MatrixPolynomial.from_coefficients([parse_matrix(c, dim) for c in value], dim=dim)


class FunctionalSpecModel(BaseModel):
    """JSON 범함수 명세

    phi/psi, moments, gallery 묶음 가운데 정확히 하나가 있어야 합니다.
    """

    dim: int = Field(default=1, ge=1, description="행렬 크기 m")
    name: Optional[str] = Field(default=None, description="표시 이름")
    description: Optional[str] = Field(default=None, description="설명")
    phi: Optional[Any] = Field(default=None, description="Φ 계수 목록 또는 약식 문자열")
    psi: Optional[Any] = Field(default=None, description="Ψ 계수 목록 또는 약식 문자열")
    mu0: Any = Field(default="identity", description='μ_0 행렬 또는 "identity"')
    moments: Optional[List[Any]] = Field(default=None, description="명시적 모멘트 목록")
    gallery: Optional[str] = Field(default=None, description="갤러리 예제 이름")
    params: Dict[str, Any] = Field(default_factory=dict, description="갤러리 매개변수")

    @model_validator(mode="after")
    def check_groups(self) -> "FunctionalSpecModel":
        """명세 묶음이 정확히 하나인지 검증"""
        has_pearson = self.phi is not None or self.psi is not None
        if has_pearson and (self.phi is None or self.psi is None):
            raise ValueError("phi 와 psi 는 함께 지정해야 합니다")
        groups = [has_pearson, self.moments is not None, self.gallery is not None]
        if sum(groups) != 1:
            raise ValueError("phi/psi, moments, gallery 가운데 정확히 하나가 필요합니다")
        return self

    def kind(self) -> str:
        if self.gallery is not None:
            return "gallery"
        return "moments" if self.moments is not None else "pearson"


@dataclass
class ResolvedSpec:
    """명세를 해석한 결과

    Attributes:
        label: 보고서에 쓸 이름
        functional: 범함수 (Pearson 데이터가 있으면 부착)
        entry: 갤러리 참조일 때 GalleryEntry
    """
    label: str
    functional: Functional
    pearson: Optional[PearsonSpec] = None
    entry: Optional[Any] = None


class SpecReader(ABC):
    """명세 읽기 인터페이스

    개방-폐쇄 원칙: 새로운 명세 소스를 추가할 때 기존 코드 수정 없이 확장 가능
    """

    @abstractmethod
    def read_specs(self, source: str) -> Dict[str, Any]:
        """명세 소스에서 이름 붙은 명세 딕셔너리를 읽어옵니다"""
        pass


class JSONSpecReader(SpecReader):
    """JSON 파일에서 명세를 읽는 구현체

    리스코프 치환 원칙: SpecReader 를 완전히 대체 가능
    """

    def read_specs(self, source: str) -> Dict[str, Any]:
        """JSON 파일에서 명세를 읽어옵니다

        Raises:
            FileNotFoundError: 파일이 없을 때
            json.JSONDecodeError: JSON 형식이 잘못되었을 때
        """
        path = Path(source)
        if not path.exists():
            raise FileNotFoundError(f"명세 파일을 찾을 수 없습니다: {source}")
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)


def build_functional(model: FunctionalSpecModel, tol: Optional[Tolerance] = None) -> ResolvedSpec:
    """검증된 명세를 범함수로 변환

    Raises:
        SpecParseError: 행렬/다항식 파싱 실패 또는 잘못된 Pearson 데이터
    """
    label = model.name or model.kind()
    try:
        if model.gallery is not None:
            from ..gallery import build
            entry = build(model.gallery, **model.params)
            return ResolvedSpec(model.name or f"gallery:{model.gallery}", entry.functional,
                                entry.pearson, entry)
        if model.moments is not None:
            mats = [parse_matrix(mu, model.dim) for mu in model.moments]
            return ResolvedSpec(label, from_moments(mats, name=label))
        Phi = parse_polynomial(model.phi, model.dim)
        Psi = parse_polynomial(model.psi, model.dim)
        mu0 = None if model.mu0 == "identity" else parse_matrix(model.mu0, model.dim)
        spec = PearsonSpec(Phi, Psi, mu0)
        if spec.is_p21():
            functional = from_pearson(spec, tol, name=label)
        else:
            raise SpecParseError(f"모멘트 생성에는 deg Φ ≤ 2, deg Ψ ≤ 1 이 필요합니다 (p={spec.p}, q={spec.q})")
        return ResolvedSpec(label, functional, spec)
    except SpecParseError:
        raise
    except (PearsonMopError, ValueError) as e:
        raise SpecParseError(f"명세 '{label}' 를 범함수로 바꿀 수 없습니다: {e}") from e


class SpecManager:
    """이름 붙은 범함수 명세 관리자

    단일 책임 원칙: 명세의 읽기, 검증, 해석만 담당
    의존성 역전 원칙: SpecReader 추상화에 의존하여 구체적인 구현에 독립적
    """

    def __init__(self, spec_reader: SpecReader):
        """의존성 주입으로 명세 읽기 전략을 받습니다

        Args:
            spec_reader: 명세를 읽을 SpecReader 구현체
        """
        self._spec_reader = spec_reader
        self._specs: Dict[str, FunctionalSpecModel] = {}

    @staticmethod
    def parse(data: Any) -> FunctionalSpecModel:
        try:
            return FunctionalSpecModel.model_validate(data)
        except ValidationError as e:
            raise SpecParseError(f"범함수 명세 검증 실패: {e}") from e

    def load_specs(self, config_path: str) -> Dict[str, FunctionalSpecModel]:
        """명세 파일에서 모든 명세를 로드합니다

        Raises:
            SpecParseError: 파일이 없거나 형식이 잘못되었을 때
        """
        try:
            data = self._spec_reader.read_specs(config_path)
        except (FileNotFoundError, json.JSONDecodeError) as e:
            raise SpecParseError(f"명세 파일 읽기 실패: {e}")

        # 두 가지 형식 지원: {"specs": {...}} 또는 직접 {...}
        specs_data = data.get("specs", data) if isinstance(data, dict) else None
        if not isinstance(specs_data, dict):
            raise SpecParseError("명세 파일 최상위는 객체여야 합니다")
        self._specs.clear()
        for name, spec in specs_data.items():
            model = self.parse(spec)
            if model.name is None:
                model = model.model_copy(update={"name": name})
            self._specs[name] = model
        logger.info(f"명세 {len(self._specs)}개 로드: {config_path}")
        return self._specs.copy()

    def get_spec(self, name: str) -> Optional[FunctionalSpecModel]:
        """이름으로 명세를 조회합니다"""
        return self._specs.get(name)

    def get_spec_names(self) -> List[str]:
        """등록된 모든 명세 이름을 반환합니다"""
        return list(self._specs.keys())

    def resolve(self, argument: str, params: Optional[Dict[str, Any]] = None,
                tol: Optional[Tolerance] = None) -> ResolvedSpec:
        """CLI 명세 인자를 해석합니다

        인라인 JSON, `gallery:<name>`, `spec:<name>`, `.json` 파일 경로를 받습니다.

        Raises:
            SpecParseError: 해석할 수 없는 인자
        """
        params = params or {}
        text = argument.strip()
        if text.startswith("gallery:"):
            model = self.parse({"gallery": text[len("gallery:"):], "params": params})
        elif text.startswith("spec:"):
            name = text[len("spec:"):]
            if not self._specs:
                from .env_config import get_settings
                self.load_specs(get_settings().get_specs_config_path())
            model = self.get_spec(name)
            if model is None:
                raise SpecParseError(f"등록되지 않은 명세입니다: {name}")
        elif text.startswith("{"):
            try:
                model = self.parse(json.loads(text))
            except json.JSONDecodeError as e:
                raise SpecParseError(f"인라인 JSON 파싱 실패: {e}") from e
        elif text.endswith(".json"):
            try:
                model = self.parse(self._spec_reader.read_specs(text))
            except (FileNotFoundError, json.JSONDecodeError) as e:
                raise SpecParseError(f"명세 파일 읽기 실패: {e}") from e
        else:
            raise SpecParseError(f"명세 인자를 해석할 수 없습니다: {argument!r}")
        return build_functional(model, tol)


def create_spec_manager() -> SpecManager:
    """JSON 명세 읽기를 쓰는 기본 SpecManager 를 생성합니다"""
    return SpecManager(JSONSpecReader())
