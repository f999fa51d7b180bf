"""이름 붙은 예제 범함수 모음

각 예제는 가중치 적분 오라클로 모멘트를 주고, 알려진 Pearson 데이터와
기대 사실(class, 가군 계수, 양정치성 등)을 함께 기록합니다.
"""

import inspect
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ..errors import DimensionMismatch, InvalidParameter, UnknownExample
from ..functional import Functional, PearsonResidual, PearsonSpec, from_oracle, spec_residual
from ..linalg import MatrixPolynomial, as_cmatrix
from ..zeroclass import ZeroClassSpec
from .oracles import CircleParams, circle_bessel_moments, matrix_family_mu0
from .weights import (
    CircleWeight, GammaWeight, GaussianWeight, JacobiWeight, MatrixWeight, ScalarWeight,
    WeightTerm, entrywise,
)

logger = logging.getLogger(__name__)

E11 = np.array([[1, 0], [0, 0]], dtype=complex)


@dataclass
class GalleryEntry:
    """예제 범함수와 그 알려진 데이터

    Attributes:
        pearson: 대표 Pearson 쌍 (μ_0 는 오라클 μ_0)
        zero_class: Φ = αI 인 경우의 영류 명세
        expected: 알려진 사실 (class, 가군 계수, 양정치성 …)
        companions: 함께 검증할 범함수 (예: 인쇄된 u^{(1)} 가중치)
        alternates: 같은 범함수의 다른 Pearson 쌍
        right_pair: 우측 ODE 에 쓰는 (Φ^{(0)}, Ψ^{(0)})
    """
    name: str
    params: Dict[str, Any]
    functional: Functional
    pearson: Optional[PearsonSpec] = None
    zero_class: Optional[ZeroClassSpec] = None
    expected: Dict[str, Any] = field(default_factory=dict)
    weight: Optional[MatrixWeight] = None
    companions: Dict[str, Functional] = field(default_factory=dict)
    alternates: Dict[str, PearsonSpec] = field(default_factory=dict)
    right_pair: Optional[PearsonSpec] = None
    description: str = ""

    def __post_init__(self):
        for spec in [self.pearson, self.right_pair, *self.alternates.values()]:
            if spec is not None and spec.dim != self.functional.dim:
                raise ValueError(f"{self.name}: Pearson 데이터 차원 {spec.dim} != {self.functional.dim}")

    @property
    def dim(self) -> int:
        return self.functional.dim

    def pearson_residual(self, horizon: int = 12) -> Optional[PearsonResidual]:
        """오라클 모멘트에 대한 대표 Pearson 쌍의 잔차"""
        if self.pearson is None:
            return None
        return spec_residual(self.functional, self.pearson, horizon)

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "dim": self.dim,
            "params": {k: _plain(v) for k, v in self.params.items()},
            "source": self.functional.describe()["kind"],
            "pearson": None if self.pearson is None else {"p": self.pearson.p, "q": self.pearson.q},
            "zero_class": self.zero_class is not None,
            "expected": {k: _plain(v) for k, v in self.expected.items()},
            "companions": sorted(self.companions),
            "alternates": sorted(self.alternates),
        }


def _plain(value: Any) -> Any:
    """JSON 직렬화 가능한 값으로 변환"""
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, complex):
        return value.real if value.imag == 0 else [value.real, value.imag]
    if isinstance(value, np.generic):
        return _plain(value.item())
    return value


# 매개변수 변환

def parse_param(text: str) -> Any:
    """CLI 문자열 매개변수를 값으로 변환 (JSON 우선, 그다음 복소수 표기 "1+2i")"""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise InvalidParameter(f"매개변수 값을 해석할 수 없습니다: {text!r}")


def _complex(name: str, value: Any) -> complex:
    if isinstance(value, str):
        value = parse_param(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        value = complex(value[0], value[1])
    try:
        return complex(value)
    except (TypeError, ValueError):
        raise InvalidParameter(f"{name} 는 수여야 합니다: {value!r}")


def _real(name: str, value: Any) -> float:
    z = _complex(name, value)
    if z.imag != 0:
        raise InvalidParameter(f"{name} 는 실수여야 합니다: {value!r}")
    return z.real


def _nonzero(name: str, value: Any) -> complex:
    z = _complex(name, value)
    if z == 0:
        raise InvalidParameter(f"{name} ≠ 0 이 필요합니다")
    return z


def _matrix(name: str, value: Any) -> np.ndarray:
    if isinstance(value, str):
        value = parse_param(value)
    try:
        return as_cmatrix(value)
    except (DimensionMismatch, TypeError, ValueError):
        raise InvalidParameter(f"{name} 는 정방 행렬이어야 합니다: {value!r}")


# 등록

_REGISTRY: Dict[str, Tuple[Callable[..., GalleryEntry], str]] = {}


def register(name: str, description: str):
    def wrap(builder: Callable[..., GalleryEntry]) -> Callable[..., GalleryEntry]:
        _REGISTRY[name] = (builder, description)
        return builder
    return wrap


def list_entries() -> List[Tuple[str, str]]:
    """(이름, 설명) 목록"""
    return [(name, desc) for name, (_, desc) in _REGISTRY.items()]


def build(name: str, **params) -> GalleryEntry:
    """이름으로 예제를 만듭니다

    Raises:
        UnknownExample: 등록되지 않은 이름
        InvalidParameter: 알 수 없는 매개변수이거나 유효 범위를 벗어날 때
    """
    if name not in _REGISTRY:
        raise UnknownExample(f"등록되지 않은 예제입니다: {name}")
    builder, description = _REGISTRY[name]
    try:
        bound = inspect.signature(builder).bind(**params)
    except TypeError as e:
        raise InvalidParameter(f"{name}: 매개변수 오류 ({e})") from e
    bound.apply_defaults()
    entry = builder(**params)
    entry.params = dict(bound.arguments)
    entry.description = description
    logger.info(f"갤러리 예제 생성: {name} {entry.params}")
    return entry


def _oracle_spec(weight: MatrixWeight, Phi: MatrixPolynomial, Psi: MatrixPolynomial) -> PearsonSpec:
    return PearsonSpec(Phi, Psi, weight.moment(0))


def _scalar_zero_class(weight: ScalarWeight, name: str) -> GalleryEntry:
    mw = MatrixWeight([WeightTerm(weight, MatrixPolynomial.identity(1))], name)
    zc = ZeroClassSpec(weight.alpha, weight.beta[0], weight.beta[1], mw.moment(0), name)
    return GalleryEntry(name, {}, mw.functional(zc.pearson), zc.pearson, zc,
                        expected={"zero_class": True}, weight=mw)


# 스칼라 고전 가중치

@register("hermite", "e^{−x²} (스칼라 Hermite)")
def _hermite() -> GalleryEntry:
    entry = _scalar_zero_class(GaussianWeight(), "hermite")
    entry.expected.update(positive_definite=True, canonical="Hermite")
    return entry


@register("laguerre", "x^r e^{−x} (스칼라 Laguerre)")
def _laguerre(r=0.0) -> GalleryEntry:
    entry = _scalar_zero_class(GammaWeight(_real("r", r)), "laguerre")
    entry.expected.update(positive_definite=True, canonical="Laguerre")
    return entry


@register("jacobi", "(1+x)^r(1−x)^s (스칼라 Jacobi)")
def _jacobi(r=0.0, s=0.0) -> GalleryEntry:
    entry = _scalar_zero_class(JacobiWeight(_real("r", r), _real("s", s)), "jacobi")
    entry.expected.update(positive_definite=True, canonical="Jacobi")
    return entry


@register("bessel_circle", "x^r e^{B/x}, 단위원 (스칼라 Bessel)")
def _bessel_circle(r=0, B=1.0) -> GalleryEntry:
    r_val = _real("r", r)
    if r_val != int(r_val):
        raise InvalidParameter(f"r 은 정수여야 합니다: {r}")
    entry = _scalar_zero_class(CircleWeight(int(r_val), _nonzero("B", B)), "bessel_circle")
    entry.expected.update(positive_definite=False, canonical="Bessel")
    return entry


@register("bessel_series", "Σ (A)_k^{-1}B^k x^{−(k+1)}, 단위원 (행렬 Bessel)")
def _bessel_series(A=((3.0, 1.0), (0.0, 3.0)), B=((1.0, 0.0), (0.0, 1.0))) -> GalleryEntry:
    params = CircleParams(B=_matrix("B", B), A=_matrix("A", A))
    m = params.dim
    zc = ZeroClassSpec((0, 0, 1), -params.B, params.A, circle_bessel_moments(params, 0), "bessel_series")
    functional = from_oracle(lambda n: circle_bessel_moments(params, n), m, "bessel_series", zc.pearson)
    return GalleryEntry("bessel_series", {}, functional, zc.pearson, zc,
                        expected={"zero_class": True, "positive_definite": False, "canonical": "Bessel"})


# 예제 1

@register("example1", "(1−x²)((1+3x², 2x),(2x, 1)), x ∈ (−1,1)")
def _example1() -> GalleryEntry:
    kernel = entrywise([[[1, 0, 3], [0, 2]], [[0, 2], [1]]])
    weight = MatrixWeight([WeightTerm(JacobiWeight(1.0, 1.0), kernel)], "example1")
    alpha = MatrixPolynomial.from_scalar([1, 0, -1], dim=2)
    Psi = entrywise([[[0, -2], [2]], [[2, 0, -6], [0, -8]]])
    spec = _oracle_spec(weight, alpha, Psi)
    Phi31 = entrywise([[[3, 0, -3], [0]], [[0, -2, 0, 2], [1, 0, -1]]])
    Psi31 = entrywise([[[0, -10], [2]], [[4], [0, -8]]])
    return GalleryEntry(
        "example1", {}, weight.functional(spec), spec, weight=weight,
        alternates={"M31": _oracle_spec(weight, Phi31, Psi31)},
        expected={
            "module_ranks": {(3, 2): 2, (2, 2): 1, (3, 1): 1, (2, 1): 1,
                             (1, 2): 0, (3, 0): 0, (0, 3): 0},
            "rank21_det_zero": True,
            "positive_definite": True,
        },
    )


# 예제 2–4: class s = 1, 비대각화 양정치 P_{2,1}

@register("example2", "e^{−x²}((1+|a|²x², ax),(āx, 1)), x ∈ ℝ")
def _example2(a=1.0) -> GalleryEntry:
    a = _nonzero("a", a)
    ab, k = a.conjugate(), abs(a) ** 2
    kernel = entrywise([[[1, 0, k], [0, a]], [[0, ab], [1]]])
    weight = MatrixWeight([WeightTerm(GaussianWeight(), kernel)], "example2")
    Phi = entrywise([[[k + 2], [0]], [[0, -ab * k], [1]]])
    Psi = entrywise([[[0, -4], [a]], [[2 * ab], [0, -(k + 2)]]])
    spec = _oracle_spec(weight, Phi, Psi)
    class_Psi = entrywise([[[0, k - 2], [a]], [[ab, 0, -ab * k], [0, -(k + 2)]]])
    u1 = entrywise([[[k + 2, 0, 2 * k], [0, 2 * a]], [[0, 2 * ab], [2]]])
    return GalleryEntry(
        "example2", {}, weight.functional(spec), spec, weight=weight,
        alternates={"class": _oracle_spec(weight, MatrixPolynomial.identity(2), class_Psi)},
        companions={"u1": MatrixWeight([WeightTerm(GaussianWeight(), u1)], "example2_u1").functional()},
        right_pair=spec.right_scaled(np.diag([1.0, 2.0])),
        expected={"class": 1, "rank21": 1, "positive_definite": True, "diagonalizable": False},
    )


@register("example3", "x^r e^{−x}((x+|a|²x², ax),(āx, 1)), x ∈ (0,∞)")
def _example3(a=1.0, r=0.0) -> GalleryEntry:
    a, r = _nonzero("a", a), _real("r", r)
    ab, k = a.conjugate(), abs(a) ** 2
    kernel = entrywise([[[0, 1, k], [0, a]], [[0, ab], [1]]])
    weight = MatrixWeight([WeightTerm(GammaWeight(r), kernel)], "example3")
    Phi = entrywise([[[0, k + 1], [0]], [[0, 0, -ab * k], [0, 1]]])
    Psi = entrywise([[[(r + 2) * (k + 1), -1], [a]], [[0, -(r + 2) * ab * k], [r + 1, -(k + 1)]]])
    spec = _oracle_spec(weight, Phi, Psi)
    class_Psi = entrywise([[[r + 2, k - 1], [a]], [[0, 0, -ab * k], [r + 1, -(k + 1)]]])
    u1 = entrywise([[[0, k + 1, k], [0, a]], [[0, ab], [1]]])
    return GalleryEntry(
        "example3", {}, weight.functional(spec), spec, weight=weight,
        alternates={"class": _oracle_spec(weight, MatrixPolynomial.from_scalar([0, 1], 2), class_Psi)},
        companions={"u1": MatrixWeight([WeightTerm(GammaWeight(r + 1), u1)], "example3_u1").functional()},
        right_pair=spec,
        expected={"class": 1, "rank21": 1, "positive_definite": True, "diagonalizable": False},
    )


@register("example4", "x^r e^{−x}((x²+|a|²x², ax),(āx, 1)), x ∈ (0,∞)")
def _example4(a=1.0, r=0.0) -> GalleryEntry:
    a, r = _nonzero("a", a), _real("r", r)
    ab, k = a.conjugate(), abs(a) ** 2
    kernel = entrywise([[[0, 0, k + 1], [0, a]], [[0, ab], [1]]])
    weight = MatrixWeight([WeightTerm(GammaWeight(r), kernel)], "example4")
    Phi = entrywise([[[0, 1], [-a]], [[0], [0, r + k + 2]]])
    Psi = entrywise([[[r + k + 3, -1], [a]], [[0, -ab * (k + 1)], [(r + 1) * (r + 2), -(r + k + 2)]]])
    spec = _oracle_spec(weight, Phi, Psi)
    class_Psi = entrywise([[[0, r + k + 4, -1], [a]], [[0, 0, -ab * (k + 1)], [0, r - k + 2, -1]]])
    u1 = entrywise([[[0, 0, (r + 1) * (k + 1)], [0, (r + 1) * a]], [[0, (r + 1) * ab], [r + 2]]])
    return GalleryEntry(
        "example4", {}, weight.functional(spec), spec, weight=weight,
        alternates={"class": _oracle_spec(weight, MatrixPolynomial.from_scalar([0, 0, 1], 2), class_Psi)},
        companions={"u1": MatrixWeight([WeightTerm(GammaWeight(r + 1), u1)], "example4_u1").functional()},
        right_pair=spec.right_scaled(np.diag([r + 1, 1.0])),
        expected={"class": 1, "rank21": 1, "positive_definite": True, "diagonalizable": False},
    )


@register("counterexample", "e^{−x²}((1+x⁴, x²),(x², 1)): 도함수가 직교하지 않는 양정치 가중치")
def _counterexample() -> GalleryEntry:
    kernel = entrywise([[[1, 0, 0, 0, 1], [0, 0, 1]], [[0, 0, 1], [1]]])
    weight = MatrixWeight([WeightTerm(GaussianWeight(), kernel)], "counterexample")
    return GalleryEntry("counterexample", {}, weight.functional(), weight=weight,
                        expected={"p21_generator": False, "derivatives_orthogonal": False,
                                  "positive_definite": True})


# 예제 5: 비대각화 영류 w·((R_11, a),(b, 0))

def _example5(name: str, weight: ScalarWeight, a, b, poly11: List[complex],
              logs: List[Tuple[str, complex]], q: Tuple[complex, complex],
              extra_terms: Optional[List[WeightTerm]] = None, hermitian: bool = False) -> GalleryEntry:
    """R_11 = c + ∫q/α 일 때 D(uαI) = uΨ, Ψ = ((β, 0),(q/a, β))"""
    kernel = entrywise([[poly11, [a]], [[b], [0]]])
    terms = [WeightTerm(weight, kernel)]
    terms += [WeightTerm(weight, MatrixPolynomial.constant(coef * E11), log=branch)
              for branch, coef in logs if coef != 0]
    terms += extra_terms or []
    mw = MatrixWeight(terms, name)
    beta0, beta1 = weight.beta
    psi0 = np.array([[beta0, 0], [q[0] / a, beta0]], dtype=complex)
    psi1 = np.array([[beta1, 0], [q[1] / a, beta1]], dtype=complex)
    zc = ZeroClassSpec(weight.alpha, psi0, psi1, mw.moment(0), name)
    return GalleryEntry(name, {}, mw.functional(zc.pearson), zc.pearson, zc, weight=mw,
                        expected={"zero_class": True, "positive_definite": False,
                                  "hermitian": hermitian, "diagonalizable": False})


def _is_hermitian_variant(a: complex, b: complex, *cs: complex) -> bool:
    return b == a.conjugate() and all(c.imag == 0 for c in cs)


@register("example5_hermite", "e^{−x²}((c + c₁x + c₂x², a),(b, 0))")
def _example5_hermite(a=1.0, b=1.0, c=0.0, c1=1.0, c2=0.0) -> GalleryEntry:
    a, b = _nonzero("a", a), _nonzero("b", b)
    c, c1, c2 = _complex("c", c), _complex("c1", c1), _complex("c2", c2)
    return _example5("example5_hermite", GaussianWeight(), a, b, [c, c1, c2], [], (c1, 2 * c2),
                     hermitian=_is_hermitian_variant(a, b, c, c1, c2))


@register("example5_laguerre", "x^r e^{−x}((c + c₁x + c₂ln x, a),(b, 0))")
def _example5_laguerre(a=1.0, b=1.0, c=1.0, c1=1.0, c2=0.0, r=0.0) -> GalleryEntry:
    a, b = _nonzero("a", a), _nonzero("b", b)
    c, c1, c2 = _complex("c", c), _complex("c1", c1), _complex("c2", c2)
    return _example5("example5_laguerre", GammaWeight(_real("r", r)), a, b, [c, c1], [("x", c2)],
                     (c2, c1), hermitian=_is_hermitian_variant(a, b, c, c1, c2))


@register("example5_jacobi", "(1+x)^r(1−x)^s((c + c₁ln(1+x) + c₂ln(1−x), a),(b, 0))")
def _example5_jacobi(a=1.0, b=1.0, c=1.0, c1=1.0, c2=0.0, r=0.0, s=0.0) -> GalleryEntry:
    a, b = _nonzero("a", a), _nonzero("b", b)
    c, c1, c2 = _complex("c", c), _complex("c1", c1), _complex("c2", c2)
    weight = JacobiWeight(_real("r", r), _real("s", s))
    return _example5("example5_jacobi", weight, a, b, [c], [("1+x", c1), ("1-x", c2)],
                     (c1 - c2, -(c1 + c2)), hermitian=_is_hermitian_variant(a, b, c, c1, c2))


@register("example5_bessel", "x^r e^{B/x}((c − q₀/x, a),(b, 0)), 단위원")
def _example5_bessel(a=1.0, b=1.0, c=1.0, q0=1.0, r=0, B=1.0) -> GalleryEntry:
    a, b = _nonzero("a", a), _nonzero("b", b)
    c, q0 = _complex("c", c), _complex("q0", q0)
    r_val = _real("r", r)
    if r_val != int(r_val):
        raise InvalidParameter(f"r 은 정수여야 합니다: {r}")
    weight = CircleWeight(int(r_val), _nonzero("B", B))
    pole = WeightTerm(weight, MatrixPolynomial.constant(-q0 * E11), shift=-1)
    return _example5("example5_bessel", weight, a, b, [c], [], (q0, 0), extra_terms=[pole])


# 행렬 지수 가중치족 (교환하는 A, B)

def _family(name: str, kind: str, alpha, psi0, psi1, A, B) -> GalleryEntry:
    zc = ZeroClassSpec(alpha, psi0, psi1, matrix_family_mu0(kind, A, B), name)
    hermitian = bool(np.allclose(A, A.conj().T) and np.allclose(B, B.conj().T))
    return GalleryEntry(name, {}, zc.functional(), zc.pearson, zc,
                        expected={"zero_class": True, "hermitian": hermitian})


_JORDAN = ((1.0, 1.0), (0.0, 1.0))
_EYE = ((1.0, 0.0), (0.0, 1.0))


@register("hermite_family", "e^{Ax}e^{−Bx²}, x ∈ ℝ")
def _hermite_family(A=_JORDAN, B=_EYE) -> GalleryEntry:
    A, B = _matrix("A", A), _matrix("B", B)
    return _family("hermite_family", "hermite", (1, 0, 0), A, -2 * B, A, B)


@register("laguerre_family", "x^A e^{−Bx}, x ∈ (0,∞)")
def _laguerre_family(A=((0.5, 1.0), (0.0, 0.5)), B=_EYE) -> GalleryEntry:
    A, B = _matrix("A", A), _matrix("B", B)
    eye = np.eye(A.shape[0])
    return _family("laguerre_family", "laguerre", (0, 1, 0), A + eye, -B, A, B)


@register("jacobi_family", "(1+x)^A(1−x)^B, x ∈ (−1,1)")
def _jacobi_family(A=_JORDAN, B=((2.0, 0.0), (0.0, 2.0))) -> GalleryEntry:
    A, B = _matrix("A", A), _matrix("B", B)
    eye = np.eye(A.shape[0])
    return _family("jacobi_family", "jacobi", (1, 0, -1), A - B, -(A + B + 2 * eye), A, B)


# 합성 및 특이 설계 명세

def _unitary(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s * np.exp(-1j * theta)], [s * np.exp(1j * theta), c]], dtype=complex)


@register("synthetic_diagonal", "U·diag(e^{−x²}, e^{x−2x²})·U*, 유니터리로 섞은 대각 영류")
def _synthetic_diagonal(theta=0.7) -> GalleryEntry:
    U = _unitary(_real("theta", theta))
    Ut = U.conj().T
    E22 = np.diag([0.0, 1.0])
    terms = [
        WeightTerm(GaussianWeight(), MatrixPolynomial.constant(U @ E11 @ Ut)),
        # e^{x−2x²} = e^{1/8}·e^{−2(x−1/4)²}
        WeightTerm(GaussianWeight(2.0, 0.25), MatrixPolynomial.constant(np.exp(0.125) * U @ E22 @ Ut)),
    ]
    mw = MatrixWeight(terms, "synthetic_diagonal")
    psi0 = U @ np.diag([0.0, 1.0]) @ Ut
    psi1 = U @ np.diag([-2.0, -4.0]) @ Ut
    zc = ZeroClassSpec((1, 0, 0), psi0, psi1, mw.moment(0), "synthetic_diagonal")
    entry = GalleryEntry("synthetic_diagonal", {}, mw.functional(zc.pearson), zc.pearson, zc, weight=mw,
                         expected={"zero_class": True, "positive_definite": True, "diagonalizable": True})
    entry.expected["unitary"] = U
    return entry


@register("crafted_jacobi", "α = 1−x², ψ_1 = 4, ψ_0 = 1/2: M_4 = 0 으로 최대 구간 2")
def _crafted_jacobi() -> GalleryEntry:
    zc = ZeroClassSpec((1, 0, -1), 0.5, 4.0, None, "crafted_jacobi")
    return GalleryEntry("crafted_jacobi", {}, zc.functional(), zc.pearson, zc,
                        expected={"max_segment": 2, "blocked_at": ("M", 4), "blocked_moment": 5})


@register("crafted_laguerre", "α = x, ψ_0 = ψ_1 = −1: α(X_1) = 0 으로 최대 구간 1")
def _crafted_laguerre() -> GalleryEntry:
    zc = ZeroClassSpec((0, 1, 0), -1.0, -1.0, None, "crafted_laguerre")
    return GalleryEntry("crafted_laguerre", {}, zc.functional(), zc.pearson, zc,
                        expected={"max_segment": 1, "blocked_at": ("alpha", 1)})
