"""보고서 모듈

CLI 분석 결과를 판정, 표, 인증 항목으로 모아 텍스트와 JSON 으로 내보냅니다.
"""

from .report import (
    ReportItemType,
    ReportItem,
    Report,
    SCHEMA_VERSION,
    encode_value,
    format_value,
    create_verdict,
    create_table,
    create_certificate,
    create_note,
    create_error
)

__all__ = [
    # 보고서 타입
    'ReportItemType',
    'ReportItem',
    'Report',
    'SCHEMA_VERSION',
    # 값 변환
    'encode_value',
    'format_value',
    # 항목 생성
    'create_verdict',
    'create_table',
    'create_certificate',
    'create_note',
    'create_error'
]
