#!/usr/bin/env python3
"""테스트 실행 스크립트

pearson_mop 패키지의 테스트 파일들을 하나씩 pytest 로 실행합니다.
올바른 Python 경로 설정으로 import 문제를 해결합니다.
"""

import os
import subprocess
import sys
from pathlib import Path

TEST_FILES = [
    "test_config.py",
    "test_linalg.py",
    "test_functional.py",
    "test_mop.py",
    "test_pearson.py",
    "test_zeroclass.py",
    "test_gallery.py",
    "test_cli.py",
    "test_properties.py",
]


def main():
    """메인 함수"""
    # pearson_mop/scripts/run_tests.py -> ../..
    project_root = Path(__file__).parent.parent.parent
    tests_dir = project_root / "pearson_mop" / "tests"

    env = {
        **dict(os.environ),
        "PYTHONPATH": str(project_root)
    }

    print("🚀 pearson_mop 테스트 실행")
    print(f"📁 프로젝트 루트: {project_root}")
    print(f"🧪 테스트 디렉토리: {tests_dir}")
    print()

    success_count = 0

    for test_file in TEST_FILES:
        test_path = tests_dir / test_file
        if not test_path.exists():
            print(f"⚠️ {test_file} 파일을 찾을 수 없습니다")
            print("-" * 50)
            continue
        print(f"📝 실행: {test_file}")
        try:
            result = subprocess.run(
                [sys.executable, "-m", "pytest", str(test_path), "-q", "--tb=short"],
                env=env,
                cwd=project_root,
                capture_output=True,
                text=True
            )
            if result.returncode == 0:
                print(f"✅ {test_file} 성공")
                success_count += 1
            else:
                print(f"❌ {test_file} 실패")
                print(f"출력: {result.stdout}")
                print(f"오류: {result.stderr}")
        except Exception as e:
            print(f"❌ {test_file} 실행 오류: {e}")
        print("-" * 50)

    print(f"\n🎯 결과: {success_count}/{len(TEST_FILES)} 테스트 파일 통과")

    if success_count == len(TEST_FILES):
        print("🎉 모든 테스트가 성공했습니다!")
        return 0
    print("💥 일부 테스트가 실패했습니다.")
    return 1


if __name__ == "__main__":
    sys.exit(main())
