"""pearson_mop 공용 데이터 모델

여러 모듈이 공유하는 판정(verdict) 열거형과 작은 결과 데이터 클래스를 정의합니다.
각 모델은 단일 책임을 갖도록 SOLID 원칙을 준수합니다.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple


class PsdVerdict(str, Enum):
    """행렬의 양정치성 판정"""
    POSITIVE_DEFINITE = "PositiveDefinite"
    HERMITIAN_INDEFINITE = "HermitianIndefinite"
    NON_HERMITIAN = "NonHermitian"


class MomentSourceKind(str, Enum):
    """범함수 모멘트의 출처"""
    EXPLICIT = "Explicit"
    PEARSON = "PearsonGenerated"
    ORACLE = "WeightOracle"
    DERIVED = "Derived"


class CyclicityKind(str, Enum):
    """M_{2,1}(u) 순환성 판정"""
    CYCLIC = "Cyclic"
    CYCLIC_DEGENERATE = "CyclicDegenerate"
    NOT_CYCLIC = "NotCyclic"
    EMPTY = "Empty"
    INCONCLUSIVE = "Inconclusive"


class ExistenceKind(str, Enum):
    """영류(zero class) 존재 판정"""
    QUASI_DEFINITE_TO = "QuasiDefiniteTo"
    BLOCKED_AT = "BlockedAt"


class DiagonalizabilityKind(str, Enum):
    """유니터리 대각화 가능성 판정"""
    UNITARILY_DIAGONALIZABLE = "UnitarilyDiagonalizable"
    NOT_DIAGONALIZABLE = "NotDiagonalizable"
    INCONCLUSIVE = "Inconclusive"


class GuardKind(str, Enum):
    """이중근 α 양정치성 가드 판정"""
    CONSISTENT = "ConsistentWithDoubleRootBound"
    VIOLATION = "Violation"


class CanonicalTag(str, Enum):
    """영류 표준형"""
    HERMITE = "Hermite"
    LAGUERRE = "Laguerre"
    JACOBI = "Jacobi"
    BESSEL = "Bessel"


@dataclass(frozen=True)
class AffineMap:
    """아핀 변수변환 t(x) = a·x + b"""
    a: complex
    b: complex

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("아핀 변환의 기울기 a 는 0 이 될 수 없습니다")

    def __call__(self, x: complex) -> complex:
        return self.a * x + self.b

    def inverse(self) -> "AffineMap":
        """역변환 t^{-1}(y) = (y − b)/a"""
        return AffineMap(1 / self.a, -self.b / self.a)

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """self ∘ inner"""
        return AffineMap(self.a * inner.a, self.a * inner.b + self.b)

    def is_real(self, atol: float = 1e-12) -> bool:
        return abs(complex(self.a).imag) <= atol and abs(complex(self.b).imag) <= atol


@dataclass
class ExistenceVerdict:
    """existence_check 결과

    Attributes:
        kind: QuasiDefiniteTo 또는 BlockedAt
        max_segment: 존재가 보장된 최대 n (P_0..P_n), 없으면 -1
        blocked_at: 처음 실패한 조건의 (인자 이름, 인덱스)
        reason: 사람이 읽을 수 있는 설명
        hankel_agrees: Hankel 경로와의 교차검증 결과 (수행하지 않았으면 None)
    """
    kind: ExistenceKind
    max_segment: int
    blocked_at: Optional[Tuple[str, int]] = None
    reason: str = ""
    hankel_agrees: Optional[bool] = None
    hankel_length: Optional[int] = None


@dataclass
class CyclicityVerdict:
    """cyclicity_check 결과"""
    kind: CyclicityKind
    generator: Optional[Any] = None
    rank: int = 0
    details: Dict[str, Any] = field(default_factory=dict)


@dataclass
class DiagonalizabilityReport:
    """diagonalizability_report 결과

    Attributes:
        unitary: 정규화된 범함수(μ_0 = I)를 대각화하는 유니터리 T
        congruence: 원래 모멘트에 대해 S μ_n S* 를 대각으로 만드는 S (= T L^{-1})
        witness: 실패 근거 (교환자 쌍 또는 비양정치 Δ)
    """
    kind: DiagonalizabilityKind
    unitary: Optional[Any] = None
    congruence: Optional[Any] = None
    witness: Optional[str] = None
    witness_norm: Optional[float] = None
    conditions: List[str] = field(default_factory=list)
    horizon: int = 0


@dataclass
class GuardReport:
    """bessel_positivity_guard 결과"""
    kind: GuardKind
    details: Dict[str, Any] = field(default_factory=dict)
