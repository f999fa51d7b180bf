"""pearson_mop 예외 계층

모든 라이브러리 예외는 PearsonMopError를 루트로 합니다.
인자 검증 계열 예외는 ValueError도 함께 상속하여 호출자가
표준 예외로도 잡을 수 있도록 합니다.
"""

from typing import Iterable, Optional


class PearsonMopError(Exception):
    """pearson_mop 최상위 예외"""


class DimensionMismatch(PearsonMopError, ValueError):
    """행렬/다항식 차원이 서로 맞지 않음"""


class SingularSystem(PearsonMopError):
    """블록 선형계의 조건수가 허용 한계를 넘음

    Attributes:
        condition: 추정 조건수
        order: 블록 수 (Δ의 차수 + 1)
    """

    def __init__(self, condition: float, order: Optional[int] = None):
        self.condition = condition
        self.order = order
        super().__init__(f"특이 선형계: 조건수 {condition:.3e} (블록 수 {order})")


class RecurrenceBlocked(PearsonMopError):
    """Pearson 점화식이 μ_{k+1}을 결정할 수 없음 (M_k 특이)"""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"Pearson 점화식 차단: M_{k} = ψ_1 + {k}φ_2 가 특이합니다")


class MomentHorizonExceeded(PearsonMopError, IndexError):
    """명시적 모멘트 목록의 길이를 넘어선 접근"""

    def __init__(self, n: int, available: int):
        self.n = n
        self.available = available
        super().__init__(f"모멘트 μ_{n} 요청, 제공된 모멘트는 {available}개뿐입니다")


class InvalidTransform(PearsonMopError, ValueError):
    """변수변환 또는 합동/동치 변환 인자가 잘못됨"""


class NonHermitianInput(PearsonMopError, ValueError):
    """에르미트 행렬이 요구되는 곳에 비에르미트 입력"""


class InvalidRecurrence(PearsonMopError, ValueError):
    """점화식 계수가 Favard 재구성을 허용하지 않음 (γ_k 특이)"""


class DerivativeNotOrthogonal(PearsonMopError):
    """ψ_1 + (k−1)φ_2 특이로 도함수 직교성이 성립하지 않음"""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"도함수 직교성 실패: k={k} 에서 ψ_1 + (k−1)φ_2 가 특이합니다")


class LadderBlocked(PearsonMopError):
    """사다리 관계식에 필요한 M_k 가 특이함"""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"사다리 관계식 차단: M_{k} 가 특이합니다")


class NoGeneratorFound(PearsonMopError):
    """차수 d_max 이하에서 스칼라 아이디얼 생성원을 찾지 못함"""

    def __init__(self, d_max: int):
        self.d_max = d_max
        super().__init__(f"차수 {d_max} 이하에서 D(uαI) = uΨ 를 만족하는 α 가 없습니다")


class TildeBlocked(PearsonMopError):
    """ψ_1 + φ_2 (또는 ψ_1) 특이로 틸드 Pearson 쌍을 만들 수 없음"""


class ChainBroken(PearsonMopError):
    """도함수 사슬이 level 단계에서 끊어짐"""

    def __init__(self, level: int, reason: str):
        self.level = level
        self.reason = reason
        super().__init__(f"도함수 사슬 {level}단계에서 중단: {reason}")


class ClosedFormBlocked(PearsonMopError):
    """닫힌 형태 계산 중 특이 사다리 인자"""

    def __init__(self, index: int, factor: str = "M"):
        self.index = index
        self.factor = factor
        super().__init__(f"닫힌 형태 차단: {factor}_{index} 가 특이합니다")


class OdeSolveBlocked(PearsonMopError):
    """ODE 후진대입 중 M_{k+n−1} 특이"""

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"ODE 후진대입 차단: 계수 c_{k} 를 풀 수 없습니다")


class HermiticityRequired(PearsonMopError):
    """우측 ODE 에 필요한 u, uΦ 의 에르미트성이 성립하지 않음"""


class HypothesisViolated(PearsonMopError):
    """항등식의 에르미트 가정을 만족하지 않는 모멘트가 있음"""

    def __init__(self, indices: Iterable[int]):
        self.indices = list(indices)
        super().__init__(f"비에르미트 모멘트 인덱스: {self.indices}")


class InvalidParameter(PearsonMopError, ValueError):
    """예제/오라클 매개변수가 유효 범위를 벗어남"""


class UnknownExample(PearsonMopError, KeyError):
    """등록되지 않은 갤러리 예제 이름"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "알 수 없는 예제"


class PreconditionViolated(PearsonMopError, ValueError):
    """연산의 사전조건 위반"""


class ComplexTransformRequired(PearsonMopError, ValueError):
    """표준형 변환에 복소 계수가 필요하지만 허용 플래그가 없음"""


class SpecParseError(PearsonMopError, ValueError):
    """JSON 범함수 명세 파싱 실패"""
