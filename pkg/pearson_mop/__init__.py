"""pearson_mop: Pearson 형 행렬 범함수와 행렬 직교 다항식

Pearson 방정식 D(uΦ) = uΨ 로 정의되는 행렬 범함수의 모멘트, 모닉 MOP 구간,
도함수 직교성, 영류 닫힌 형태와 미분방정식, 에르미트 대각화 판정을 제공합니다.
"""

__version__ = "0.1.0"
