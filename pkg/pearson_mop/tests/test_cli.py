#!/usr/bin/env python3
"""명령행 인터페이스와 보고서 테스트"""

import json
import sys
from pathlib import Path

import pytest

# 프로젝트 루트를 Python 경로에 추가
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from pearson_mop.cli import main, parse_params, run
from pearson_mop.errors import SpecParseError
from pearson_mop.reporting import Report, ReportItemType, create_error, create_verdict

GAUSSIAN = '{"dim": 1, "phi": "1", "psi": "-2x", "mu0": "identity"}'


def _items(report: Report, item_type: str):
    return [item for item in report.to_dict()["items"] if item["type"] == item_type]


def _verdicts(report: Report):
    return {item["title"]: item["content"] for item in _items(report, "verdict")}


# 모멘트와 종료 코드

def test_moments_inline_pearson():
    report, code = run(["moments", GAUSSIAN, "--n", "4"])
    assert code == 0
    table = _items(report, "table")[0]
    values = [row[1] for row in table["data"]["rows"]]
    assert values == pytest.approx([1.0, 0.0, 0.5, 0.0, 0.75])
    assert table["tolerance"]["rel"] > 0


def test_exit_code_parse_error():
    report, code = run(["moments", "not-a-spec"])
    assert code == 2
    assert _items(report, "error")


def test_exit_code_bad_arguments():
    _, code = run(["moments"])
    assert code == 2


def test_exit_code_violation():
    """명시적 모멘트 목록을 넘어서는 요청은 분석 실패로 기록"""
    short = '{"moments": [1, 0, 0.5], "name": "short"}'
    report, code = run(["moments", short, "--n", "4"])
    assert code == 1
    assert _verdicts(report)["moments"] == "MomentHorizonExceeded"


def test_report_exit_codes():
    report = Report(["x"])
    assert report.exit_code == 0
    report.add(create_verdict("a", "Fine"))
    assert report.exit_code == 0
    report.add(create_verdict("b", "Broken", violation=True))
    assert report.exit_code == 1
    report.add(create_error("bad"))
    assert report.exit_code == 2


# 분석 명령

def test_mop_command():
    report, code = run(["mop", GAUSSIAN, "--n", "4"])
    assert code == 0
    verdicts = _verdicts(report)
    assert verdicts["segment"] == "QuasiDefiniteTo N = 4"
    assert verdicts["orthogonality"] == "Orthogonal"


def test_mop_maximal_segment():
    report, code = run(["mop", "gallery:crafted_jacobi", "--n", "4"])
    assert code == 0
    assert _verdicts(report)["segment"] == "MaximalSegment N = 2"


def test_check_pearson_command():
    report, code = run(["check-pearson", "gallery:example2"])
    assert code == 0
    verdicts = _verdicts(report)
    assert verdicts["pearson"] == "PearsonHolds"
    assert verdicts["class"] == "PearsonHolds"


def test_class_command():
    report, _ = run(["class", "gallery:example2"])
    assert _verdicts(report)["class"] == "class s = 1"


def test_module_basis_command():
    report, _ = run(["module-basis", "gallery:example1", "--p", "3", "--q", "2"])
    assert _verdicts(report)["rank"] == "rank M_{3,2} = 2"


def _numbers(value):
    """JSON 사본 값에 들어 있는 실수 성분 (복소수는 re, im 각각)"""
    if isinstance(value, bool) or value is None:
        return []
    if isinstance(value, (int, float)):
        return [float(value)]
    if isinstance(value, dict):
        return [x for v in value.values() for x in _numbers(v)]
    if isinstance(value, list):
        return [x for v in value for x in _numbers(v)]
    return []


def test_class_output_has_no_cancellation_noise():
    report, _ = run(["class", "gallery:example2"])
    data = next(item["data"] for item in _items(report, "verdict") if item["title"] == "class")
    values = _numbers(data["psi"]) + _numbers(data["alpha"])
    assert any(v != 0.0 for v in values)
    assert all(v == 0.0 or abs(v) > 1e-9 for v in values)


def test_module_basis_output_has_no_cancellation_noise():
    report, _ = run(["module-basis", "gallery:example1", "--p", "2", "--q", "1"])
    table = _items(report, "table")[0]["data"]
    assert table["rows"]
    for row in table["rows"]:
        for poly in (row[1], row[2]):
            values = _numbers(poly)
            scale = max([1.0] + [abs(v) for v in values])
            assert all(v == 0.0 or abs(v) > 1e-9 * scale for v in values)


def test_zeroclass_check_command():
    report, code = run(["zeroclass", "check", "gallery:crafted_jacobi", "--n", "4"])
    assert code == 0
    assert _verdicts(report)["existence"] == "BlockedAt 2"


def test_zeroclass_rejects_non_zero_class():
    _, code = run(["zeroclass", "check", "gallery:example2"])
    assert code == 2


def test_derivatives_counterexample():
    report, code = run(["derivatives", "gallery:counterexample", "--degree", "5"])
    assert code == 0
    assert _verdicts(report)["derivatives"] == "DerivativesNotOrthogonal"


# 갤러리와 보고서

def test_gallery_list():
    report, code = run(["gallery", "list"])
    assert code == 0
    names = [row[0] for row in _items(report, "table")[0]["data"]["rows"]]
    assert "hermite" in names and "example5_bessel" in names


def test_gallery_show_errors():
    assert run(["gallery", "show"])[1] == 2
    assert run(["gallery", "show", "no_such_example"])[1] == 2


def test_render_text_header():
    report, _ = run(["moments", GAUSSIAN, "--n", "1"])
    text = report.render_text()
    assert text.splitlines()[0] == f"$ moments {GAUSSIAN} --n 1"


def test_report_json_roundtrip(tmp_path):
    report, _ = run(["mop", GAUSSIAN, "--n", "3"])
    path = tmp_path / "report.json"
    path.write_text(report.to_json(), encoding="utf-8")
    replayed, code = run(["report", "--json", str(path)])
    assert code == report.exit_code
    assert replayed.render_text() == report.render_text()
    assert Report.from_json(report.to_json()).to_dict() == report.to_dict()


def test_report_rejects_unknown_schema(tmp_path):
    path = tmp_path / "report.json"
    path.write_text(json.dumps({"schema": 99, "command": [], "items": []}), encoding="utf-8")
    _, code = run(["report", "--json", str(path)])
    assert code == 2


def test_main_writes_json(tmp_path, capsys):
    path = tmp_path / "out" / "moments.json"
    code = main(["--json-out", str(path), "moments", GAUSSIAN, "--n", "2"])
    assert code == 0
    assert capsys.readouterr().out.startswith("$ ")
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["exit_code"] == 0
    assert data["items"][0]["type"] == ReportItemType.TABLE.value


# 매개변수

def test_parse_params():
    assert parse_params(["a=2", "b=1+1i"]) == {"a": 2, "b": 1 + 1j}
    assert parse_params(None) == {}
    with pytest.raises(SpecParseError):
        parse_params(["novalue"])


def test_gallery_params_forwarded():
    report, code = run(["moments", "gallery:laguerre", "--param", "r=1", "--n", "2"])
    assert code == 0
    values = [row[1] for row in _items(report, "table")[0]["data"]["rows"]]
    assert values == pytest.approx([1.0, 2.0, 6.0])


@pytest.mark.parametrize("returncode,content,code", [(0, "Passed", 0), (1, "Failed", 1)])
def test_test_command_uses_runner(monkeypatch, returncode, content, code):
    monkeypatch.setattr("pearson_mop.cli.commands.run_tests", lambda: returncode)
    report, exit_code = run(["test"])
    assert exit_code == code
    assert _verdicts(report)["tests"] == content
