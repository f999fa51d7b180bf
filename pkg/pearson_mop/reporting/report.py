"""분석 보고서 메시지 타입 정의

CLI 명령이 만드는 판정, 표, 인증 정보를 항목(ReportItem)으로 모은 Report 를 정의합니다.
보고서는 JSON 으로 직렬화되며, 텍스트 출력은 JSON 사본만으로 결정되므로
저장된 JSON 을 다시 렌더링하면 같은 텍스트가 나옵니다.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

logger = logging.getLogger(__name__)
report_logger = logging.getLogger("pearson_mop.reports")

SCHEMA_VERSION = 1
SIGNIFICANT_DIGITS = 12


class ReportItemType(str, Enum):
    """보고서 항목 타입 열거형"""
    VERDICT = "verdict"          # 판정
    TABLE = "table"              # 수치 표
    CERTIFICATE = "certificate"  # 지평, 허용오차 등 인증 정보
    NOTE = "note"                # 설명
    ERROR = "error"              # 오류


def encode_value(value: Any) -> Any:
    """JSON 사본용 값 변환 (복소수는 {"re", "im"}, 배열은 중첩 목록)"""
    if isinstance(value, np.ndarray):
        return encode_value(value.tolist())
    if isinstance(value, np.generic):
        return encode_value(value.item())
    if isinstance(value, complex):
        if value.imag == 0:
            return float(value.real)
        return {"re": float(value.real), "im": float(value.imag)}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, Enum):
        return value.value
    return value


def format_number(x: float) -> str:
    x = x + 0.0  # −0 제거
    return f"{x:.{SIGNIFICANT_DIGITS}g}"


def format_value(value: Any) -> str:
    """JSON 사본 값을 텍스트로 (유효숫자 12자리, 복소수는 re+imj)"""
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, (int, float)):
        return format_number(value)
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        sign = "+" if value["im"] >= 0 else "-"
        return f"{format_number(value['re'])}{sign}{format_number(abs(value['im']))}j"
    if isinstance(value, list):
        if value and all(isinstance(row, list) for row in value):
            return "[" + "; ".join(", ".join(format_value(v) for v in row) for row in value) + "]"
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {format_value(v)}" for k, v in value.items()) + "}"
    return str(value)


@dataclass
class ReportItem:
    """보고서 항목

    Attributes:
        type: 항목 타입
        title: 제목
        content: 본문 (판정 이름, 설명 문장)
        data: JSON 사본 데이터 (표: columns/rows, 판정: violation 등)
        tolerance: 이 항목을 계산한 허용오차
    """
    type: ReportItemType
    title: str
    content: Optional[str] = None
    data: Dict[str, Any] = field(default_factory=dict)
    tolerance: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": self.type.value,
            "title": self.title,
            "content": self.content,
            "data": encode_value(self.data),
            "tolerance": encode_value(self.tolerance),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportItem":
        return cls(ReportItemType(data["type"]), data["title"], data.get("content"),
                   data.get("data") or {}, data.get("tolerance"))

    @property
    def is_violation(self) -> bool:
        return self.type is ReportItemType.VERDICT and bool(self.data.get("violation"))

    def render(self) -> List[str]:
        if self.type is ReportItemType.TABLE:
            lines = [f"[{self.title}]"]
            columns = self.data.get("columns", [])
            lines.append("  " + " | ".join(str(c) for c in columns))
            for row in self.data.get("rows", []):
                lines.append("  " + " | ".join(format_value(v) for v in row))
            if self.tolerance:
                lines.append(f"  (허용오차 {format_value(self.tolerance)})")
            return lines
        if self.type is ReportItemType.VERDICT:
            mark = "✗" if self.is_violation else "✓"
            line = f"{mark} {self.title}: {self.content}"
            details = {k: v for k, v in self.data.items() if k != "violation"}
            return [line] + [f"    {k} = {format_value(v)}" for k, v in details.items()]
        if self.type is ReportItemType.CERTIFICATE:
            return [f"# {self.title}"] + [f"    {k} = {format_value(v)}" for k, v in self.data.items()]
        if self.type is ReportItemType.ERROR:
            return [f"오류: {self.content}"]
        return [self.content or self.title]


@dataclass
class Report:
    """명령 하나의 보고서

    종료 코드는 오류 항목이 있으면 2, Violation 판정이 있으면 1, 그 외 0 입니다.
    """
    command: List[str]
    items: List[ReportItem] = field(default_factory=list)
    schema: int = SCHEMA_VERSION

    def add(self, item: ReportItem) -> "Report":
        self.items.append(item)
        return self

    @property
    def exit_code(self) -> int:
        if any(item.type is ReportItemType.ERROR for item in self.items):
            return 2
        return 1 if any(item.is_violation for item in self.items) else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": self.schema,
            "command": list(self.command),
            "exit_code": self.exit_code,
            "items": [item.to_dict() for item in self.items],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"지원하지 않는 보고서 스키마입니다: {data.get('schema')}")
        return cls(list(data.get("command", [])), [ReportItem.from_dict(i) for i in data.get("items", [])])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def render_text(self) -> str:
        """JSON 사본에서 텍스트 출력을 만듭니다"""
        mirror = Report.from_dict(json.loads(self.to_json()))
        lines = [f"$ {' '.join(mirror.command)}"]
        for item in mirror.items:
            lines.extend(item.render())
        return "\n".join(lines)

    def emit_log(self) -> None:
        """리포트 로거에 JSON 사본을 기록"""
        report_logger.info(json.dumps(self.to_dict(), ensure_ascii=False))


def create_verdict(title: str, verdict: str, violation: bool = False, **details) -> ReportItem:
    """판정 항목 생성"""
    return ReportItem(ReportItemType.VERDICT, title, verdict, {"violation": violation, **details})


def create_table(title: str, columns: List[str], rows: List[List[Any]],
                 tolerance: Optional[Dict[str, Any]] = None) -> ReportItem:
    """수치 표 항목 생성"""
    return ReportItem(ReportItemType.TABLE, title, None, {"columns": columns, "rows": rows}, tolerance)


def create_certificate(title: str, **data) -> ReportItem:
    """인증 정보 항목 생성"""
    return ReportItem(ReportItemType.CERTIFICATE, title, None, data)


def create_note(content: str) -> ReportItem:
    """설명 항목 생성"""
    return ReportItem(ReportItemType.NOTE, "note", content)


def create_error(error: str) -> ReportItem:
    """오류 항목 생성"""
    return ReportItem(ReportItemType.ERROR, "error", error, {"error": error})
