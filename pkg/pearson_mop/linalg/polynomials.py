"""행렬 계수 다항식

MatrixPolynomial 은 (d+1, m, m) 복소 배열로 계수 c_0..c_d 를 보관합니다.
x^k 의 계수가 c_k 이며 끝의 0 계수는 잘라내므로 차수가 잘 정의됩니다.
0 다항식의 차수는 None 입니다.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npoly

from ..errors import DimensionMismatch

logger = logging.getLogger(__name__)

Scalar = Union[int, float, complex]


class MatrixPolynomial:
    """정방 복소 행렬 계수를 갖는 다항식 (값 의미론, 불변)"""

    __slots__ = ("_coeffs",)
    # numpy 스칼라/배열과의 연산에서 ufunc 브로드캐스트 대신 우리 연산자를 쓰도록 함
    __array_ufunc__ = None

    def __init__(self, coeffs, dim: Optional[int] = None):
        arr = np.array(coeffs, dtype=complex)
        if arr.ndim == 2:
            arr = arr[None, :, :]
        if arr.size == 0:
            if dim is None:
                raise DimensionMismatch("빈 계수 목록에는 dim 이 필요합니다")
            arr = np.zeros((0, dim, dim), dtype=complex)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2] or arr.shape[1] < 1:
            raise DimensionMismatch(f"계수 배열 형태가 잘못되었습니다: {arr.shape}")
        if dim is not None and arr.shape[1] != dim:
            raise DimensionMismatch(f"차원 불일치: {arr.shape[1]} != {dim}")
        last = arr.shape[0]
        while last > 0 and not np.any(arr[last - 1]):
            last -= 1
        arr = arr[:last].copy()
        arr.setflags(write=False)
        self._coeffs = arr

    # 생성자

    @classmethod
    def zero(cls, dim: int) -> "MatrixPolynomial":
        return cls(np.zeros((0, dim, dim)), dim=dim)

    @classmethod
    def constant(cls, A) -> "MatrixPolynomial":
        A = np.array(A, dtype=complex)
        if A.ndim == 0:
            A = A.reshape(1, 1)
        return cls(A[None, :, :])

    @classmethod
    def identity(cls, dim: int) -> "MatrixPolynomial":
        return cls.constant(np.eye(dim))

    @classmethod
    def monomial(cls, k: int, dim: int, coeff=None) -> "MatrixPolynomial":
        """coeff·x^k (coeff 기본값 I)"""
        arr = np.zeros((k + 1, dim, dim), dtype=complex)
        arr[k] = np.eye(dim) if coeff is None else coeff
        return cls(arr)

    @classmethod
    def from_scalar(cls, coeffs: Sequence[Scalar], dim: int = 1) -> "MatrixPolynomial":
        """스칼라 다항식 Σ a_k x^k 를 Σ a_k I x^k 로 올립니다"""
        coeffs = np.asarray(coeffs, dtype=complex).reshape(-1)
        arr = coeffs[:, None, None] * np.eye(dim)[None, :, :]
        return cls(arr, dim=dim)

    @classmethod
    def from_coefficients(cls, mats: Iterable, dim: Optional[int] = None) -> "MatrixPolynomial":
        mats = [np.array(c, dtype=complex).reshape(np.shape(c) or (1, 1)) for c in mats]
        if not mats:
            if dim is None:
                raise DimensionMismatch("빈 계수 목록에는 dim 이 필요합니다")
            return cls.zero(dim)
        return cls(np.stack(mats), dim=dim)

    # 기본 속성

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def dim(self) -> int:
        return self._coeffs.shape[1]

    @property
    def degree(self) -> Optional[int]:
        n = self._coeffs.shape[0]
        return None if n == 0 else n - 1

    def is_zero(self) -> bool:
        return self._coeffs.shape[0] == 0

    def coeff(self, k: int) -> np.ndarray:
        """x^k 의 계수 (범위 밖이면 0 행렬)"""
        if 0 <= k < self._coeffs.shape[0]:
            return self._coeffs[k]
        return np.zeros((self.dim, self.dim), dtype=complex)

    def leading(self) -> np.ndarray:
        if self.is_zero():
            return np.zeros((self.dim, self.dim), dtype=complex)
        return self._coeffs[-1]

    def padded(self, length: int) -> np.ndarray:
        """계수를 length 개로 0 채움한 배열"""
        out = np.zeros((max(length, self._coeffs.shape[0]), self.dim, self.dim), dtype=complex)
        out[: self._coeffs.shape[0]] = self._coeffs
        return out

    def norm(self) -> float:
        """계수 프로베니우스 노름의 최대값"""
        if self.is_zero():
            return 0.0
        return float(np.max(np.linalg.norm(self._coeffs, axis=(1, 2))))

    # 산술

    def _check(self, other: "MatrixPolynomial") -> None:
        if other.dim != self.dim:
            raise DimensionMismatch(f"다항식 차원 불일치: {self.dim} != {other.dim}")

    def __add__(self, other):
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        self._check(other)
        n = max(self._coeffs.shape[0], other._coeffs.shape[0])
        return MatrixPolynomial(self.padded(n) + other.padded(n), dim=self.dim)

    def __sub__(self, other):
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return MatrixPolynomial(-self._coeffs, dim=self.dim)

    def __mul__(self, other):
        if isinstance(other, MatrixPolynomial):
            return poly_mul(self, other)
        if np.isscalar(other):
            return MatrixPolynomial(self._coeffs * other, dim=self.dim)
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return MatrixPolynomial(self._coeffs * other, dim=self.dim)
        return NotImplemented

    def __truediv__(self, other):
        if np.isscalar(other):
            return MatrixPolynomial(self._coeffs / other, dim=self.dim)
        return NotImplemented

    def lmul(self, A) -> "MatrixPolynomial":
        """A·P (상수 행렬을 왼쪽에 곱함)"""
        A = np.asarray(A, dtype=complex)
        return MatrixPolynomial(np.einsum("ij,kjl->kil", A, self._coeffs), dim=self.dim)

    def rmul(self, A) -> "MatrixPolynomial":
        """P·A (상수 행렬을 오른쪽에 곱함)"""
        A = np.asarray(A, dtype=complex)
        return MatrixPolynomial(np.einsum("kij,jl->kil", self._coeffs, A), dim=self.dim)

    def shift(self, k: int = 1) -> "MatrixPolynomial":
        """x^k·P"""
        if self.is_zero() or k == 0:
            return self
        pad = np.zeros((k, self.dim, self.dim), dtype=complex)
        return MatrixPolynomial(np.concatenate([pad, self._coeffs]), dim=self.dim)

    def derivative(self, order: int = 1) -> "MatrixPolynomial":
        c = self._coeffs
        for _ in range(order):
            if c.shape[0] <= 1:
                return MatrixPolynomial.zero(self.dim)
            k = np.arange(1, c.shape[0], dtype=float)
            c = c[1:] * k[:, None, None]
        return MatrixPolynomial(c, dim=self.dim)

    def adjoint(self) -> "MatrixPolynomial":
        """계수별 켤레 전치 P*(x) = Σ c_k* x^k"""
        return MatrixPolynomial(np.conj(np.transpose(self._coeffs, (0, 2, 1))), dim=self.dim)

    def __call__(self, x) -> np.ndarray:
        """스칼라 x 에서 Horner 평가"""
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for c in self._coeffs[::-1]:
            out = out * x + c
        return out

    def evaluate_right(self, X) -> np.ndarray:
        """행렬 인자 X 에 대해 Σ c_k X^k (X 는 오른쪽에서 거듭제곱)"""
        X = np.asarray(X, dtype=complex)
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for c in self._coeffs[::-1]:
            out = out @ X + c
        return out

    def to_scalar(self) -> np.ndarray:
        """dim 1 다항식의 스칼라 계수 배열 (낮은 차수부터)"""
        if self.dim != 1:
            raise DimensionMismatch("스칼라 변환은 dim 1 다항식만 가능합니다")
        return self._coeffs[:, 0, 0].copy()

    def is_scalar_multiple_of_identity(self, atol: float = 0.0) -> bool:
        eye = np.eye(self.dim)
        for c in self._coeffs:
            if np.max(np.abs(c - c[0, 0] * eye), initial=0.0) > atol:
                return False
        return True

    def allclose(self, other: "MatrixPolynomial", rtol: float = 1e-9, atol: float = 1e-12) -> bool:
        self._check(other)
        n = max(self._coeffs.shape[0], other._coeffs.shape[0], 1)
        diff = np.max(np.abs(self.padded(n) - other.padded(n)))
        scale = max(self.norm(), other.norm())
        return bool(diff <= atol + rtol * scale)

    def residual_norm(self, other: "MatrixPolynomial") -> float:
        """max_k ‖c_k − c'_k‖"""
        return (self - other).norm()

    def trimmed(self, atol: float) -> "MatrixPolynomial":
        """절대값 atol 이하의 끝 계수를 잘라낸 사본"""
        c = self._coeffs
        last = c.shape[0]
        while last > 0 and np.max(np.abs(c[last - 1])) <= atol:
            last -= 1
        return MatrixPolynomial(c[:last], dim=self.dim)

    def __repr__(self) -> str:
        return f"MatrixPolynomial(dim={self.dim}, degree={self.degree})"


def poly_mul(A: MatrixPolynomial, B: MatrixPolynomial) -> MatrixPolynomial:
    """A·B, 결과의 k 번째 계수는 Σ_{i+j=k} a_i·b_j (A 계수가 왼쪽)"""
    if A.dim != B.dim:
        raise DimensionMismatch(f"다항식 차원 불일치: {A.dim} != {B.dim}")
    if A.is_zero() or B.is_zero():
        return MatrixPolynomial.zero(A.dim)
    a, b = A.coeffs, B.coeffs
    out = np.zeros((a.shape[0] + b.shape[0] - 1, A.dim, A.dim), dtype=complex)
    for i in range(a.shape[0]):
        out[i: i + b.shape[0]] += np.einsum("ij,kjl->kil", a[i], b)
    return MatrixPolynomial(out, dim=A.dim)


def _entry_table(P: MatrixPolynomial) -> List[List[np.ndarray]]:
    m = P.dim
    c = P.coeffs
    return [[c[:, i, j] if c.shape[0] else np.zeros(1, dtype=complex) for j in range(m)]
            for i in range(m)]


def _minor(table, row: int, col: int):
    return [[e for j, e in enumerate(r) if j != col] for i, r in enumerate(table) if i != row]


def _det(table) -> np.ndarray:
    """다항식 환 위의 여인수 전개 (첫 행 기준)"""
    n = len(table)
    if n == 0:
        return np.ones(1, dtype=complex)
    if n == 1:
        return table[0][0]
    total = np.zeros(1, dtype=complex)
    for j in range(n):
        term = npoly.polymul(table[0][j], _det(_minor(table, 0, j)))
        total = npoly.polyadd(total, term) if j % 2 == 0 else npoly.polysub(total, term)
    return total


def poly_det_adj(P: MatrixPolynomial) -> Tuple[MatrixPolynomial, MatrixPolynomial]:
    """det P (dim 1) 와 수반행렬 adj P

    adj_{ij} = (−1)^{i+j} det(P 에서 j행 i열 제거) 이므로 P·adj = adj·P = det·I.
    """
    m = P.dim
    table = _entry_table(P)
    det = MatrixPolynomial.from_scalar(_det(table), dim=1)
    if m == 1:
        return det, MatrixPolynomial.identity(1)
    cof = [[None] * m for _ in range(m)]
    length = 1
    for i in range(m):
        for j in range(m):
            e = _det(_minor(table, j, i))
            cof[i][j] = e if (i + j) % 2 == 0 else -e
            length = max(length, len(cof[i][j]))
    arr = np.zeros((length, m, m), dtype=complex)
    for i in range(m):
        for j in range(m):
            arr[: len(cof[i][j]), i, j] = cof[i][j]
    return det, MatrixPolynomial(arr, dim=m)


def scalar_poly(P: MatrixPolynomial) -> np.ndarray:
    """dim 1 다항식 또는 스칼라×I 다항식의 스칼라 계수"""
    if P.dim == 1:
        return P.to_scalar()
    return P.coeffs[:, 0, 0].copy()


def stack_polys(polys: Sequence[MatrixPolynomial], length: int) -> np.ndarray:
    """다항식 목록을 (len, length, m, m) 계수 배열로"""
    return np.stack([p.padded(length)[:length] for p in polys])
