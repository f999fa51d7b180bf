"""pearson_mop 실행 스크립트"""
