"""pearson_mop 테스트 패키지"""
